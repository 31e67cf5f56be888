// Copyright 2026 The sectime Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sectime/render.h"

#include <string>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sectime/generator.h"
#include "sectime/greedy.h"
#include "test_util.h"

namespace sectime {
namespace {

using ::sectime::testing::DataBuilder;
using ::sectime::testing::MakeSectioning;
using ::sectime::testing::Unwrap;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

std::vector<std::string> Lines(const std::string& text) {
  return absl::StrSplit(text, '\n', absl::SkipEmpty());
}

// Splits a grid row into trimmed cells.
std::vector<std::string> Cells(const std::string& row) {
  std::vector<std::string> out;
  for (absl::string_view c : absl::StrSplit(row, '|')) {
    out.emplace_back(absl::StripAsciiWhitespace(c));
  }
  return out;
}

TEST(RenderTest, OneMeeting) {
  DataBuilder b;
  b.Grid(2, 3, std::nullopt).AddRoom("R1", "room").AddProfessor("P");
  b.AddCourse("A").AddSection("a", "A", 1, "P", "room");
  b.AddGroup("G", 1, {"A"});
  const Instance inst = b.Make();
  const Sectioning f = MakeSectioning(inst, {{"a"}});
  Timetable tt(1);
  tt.sections[0] = {{1, 2, -1}};
  const std::string text = Unwrap(
      RenderSchedule(inst, f, tt, "division:G.1", RenderFormat::kText));
  const std::vector<std::string> lines = Lines(text);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "division G.1 (group G, 1 student)");
  EXPECT_THAT(Cells(lines[1]), ElementsAre("period", "Mon", "Tue"));
  EXPECT_THAT(Cells(lines[3]), ElementsAre("P0", "", ""));
  EXPECT_THAT(Cells(lines[5]), ElementsAre("P2", "", "a"));
}

TEST(RenderTest, ExtendedBlockAndLunch) {
  DataBuilder b;
  b.Grid(1, 6, 3).AddRoom("L1", "lab").AddProfessor("P");
  b.AddCourse("C").AddSection("c", "C", 1, "P", "lab", 3, true);
  b.AddGroup("G", 1, {"C"});
  const Instance inst = b.Make();
  const Sectioning f = MakeSectioning(inst, {{"c"}});
  Timetable tt(1);
  tt.sections[0] = {{0, 0, -1}, {0, 1, -1}, {0, 2, -1}};
  const std::vector<std::string> lines = Lines(Unwrap(
      RenderSchedule(inst, f, tt, "professor:P", RenderFormat::kText)));
  ASSERT_EQ(lines.size(), 9u);
  // A row: "P1 | |" splits into the label and a continuation marker.
  EXPECT_EQ(lines[3].substr(0, 2), "P0");
  EXPECT_THAT(lines[3], HasSubstr("c"));
  EXPECT_THAT(lines[4], ::testing::EndsWith("|"));
  EXPECT_THAT(lines[5], ::testing::EndsWith("|"));
  EXPECT_THAT(lines[6], HasSubstr("LUNCH"));
  const std::string html = Unwrap(
      RenderSchedule(inst, f, tt, "professors", RenderFormat::kHtml));
  EXPECT_THAT(html, HasSubstr("rowspan=\"3\""));
}

TEST(RenderTest, SharedSectionInEveryDivision) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt).AddRoom("R1", "room").AddRoom("R2", "room");
  b.AddRoom("H", "hall");
  b.AddProfessor("P").AddProfessor("Q").AddProfessor("S");
  b.AddCourse("A").AddCourse("M");
  b.AddSection("a1", "A", 1, "P", "room").AddSection("a2", "A", 1, "Q", "room");
  b.AddSection("m", "M", 2, "S", "hall");
  b.AddGroup("G", 2, {"A", "M"}).Common("m");
  const Instance inst = b.Make();
  const Sectioning f = MakeSectioning(inst, {{"a1", "m"}, {"a2", "m"}});
  Timetable tt(3);
  tt.sections[0] = {{0, 0, -1}};
  tt.sections[1] = {{0, 1, -1}};
  tt.sections[2] = {{0, 3, -1}};
  const std::vector<ScheduleView> views =
      Unwrap(SelectSchedules(inst, f, "divisions"));
  ASSERT_EQ(views.size(), 2u);
  for (const ScheduleView& v : views) {
    const auto cells = ScheduleCells(inst, tt, v);
    EXPECT_THAT(cells[3][0], ElementsAre(2));
  }
  EXPECT_THAT(ScheduleCells(inst, tt, views[0])[0][0], ElementsAre(0));
  EXPECT_TRUE(ScheduleCells(inst, tt, views[0])[1][0].empty());
}

TEST(RenderTest, SelectorErrors) {
  DataBuilder b;
  b.Grid(1, 2, std::nullopt).AddRoom("R1", "room").AddProfessor("P");
  b.AddCourse("A").AddSection("a", "A", 1, "P", "room");
  b.AddGroup("G", 1, {"A"});
  const Instance inst = b.Make();
  const Sectioning f = MakeSectioning(inst, {{"a"}});
  EXPECT_EQ(SelectSchedules(inst, f, "division:X.1").status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_EQ(SelectSchedules(inst, f, "professor:Z").status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_EQ(SelectSchedules(inst, f, "rooms").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(ParseRenderFormat("pdf").ok());
  EXPECT_EQ(Unwrap(ParseRenderFormat("html")), RenderFormat::kHtml);
}

TEST(RenderTest, PlantedGridMatchesSlotForSlot) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const PlantedInstance planted = Unwrap(GeneratePlanted(seed));
    const Instance inst = Unwrap(Instance::Create(planted.data));
    const Sectioning f = Unwrap(GreedySection(inst, seed)).sectioning;
    for (const ScheduleView& v :
         Unwrap(SelectSchedules(inst, f, "professors"))) {
      const auto cells = ScheduleCells(inst, planted.timetable, v);
      for (const int s : v.sections) {
        for (const Meeting& m : planted.timetable.sections[s]) {
          EXPECT_THAT(cells[m.period][m.day], ::testing::Contains(s));
        }
      }
      int filled = 0;
      for (const auto& row : cells) {
        for (const auto& cell : row) filled += static_cast<int>(cell.size());
      }
      int meetings = 0;
      for (const int s : v.sections) {
        meetings += static_cast<int>(planted.timetable.sections[s].size());
      }
      EXPECT_EQ(filled, meetings);
    }
  }
}

}  // namespace
}  // namespace sectime
