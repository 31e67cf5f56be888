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

#include "sectime/pipeline.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sectime/generator.h"
#include "test_util.h"

namespace sectime {
namespace {

using ::sectime::testing::DataBuilder;
using ::sectime::testing::Unwrap;
using ::testing::HasSubstr;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PipelineConfig Quick() {
  PipelineConfig config;
  config.minimize_seconds = 0.2;
  config.timetable_seconds = 1.0;
  config.tabu_rounds = 1;
  return config;
}

Instance Tiny(uint64_t seed) {
  return Unwrap(Instance::Create(Unwrap(GeneratePlanted(seed)).data));
}

// Three one-meeting sections that every student shares, two slots.
Instance Overfull() {
  DataBuilder b;
  b.Grid(1, 2, std::nullopt).AddRoom("R1", "room").AddRoom("R2", "room");
  b.AddRoom("R3", "room");
  b.AddProfessor("P").AddProfessor("Q").AddProfessor("S");
  b.AddCourse("A").AddCourse("B").AddCourse("C");
  b.AddSection("a", "A", 2, "P", "room").AddSection("b", "B", 2, "Q", "room");
  b.AddSection("c", "C", 2, "S", "room");
  b.AddGroup("G", 2, {"A", "B", "C"});
  return b.Make();
}

TEST(PercentReductionTest, Rounding) {
  EXPECT_EQ(PercentReduction(200, 150), 25.0);
  EXPECT_EQ(PercentReduction(3, 2), 33.33);
  EXPECT_EQ(PercentReduction(3, 1), 66.67);
  EXPECT_EQ(PercentReduction(0, 0), 0.0);
  EXPECT_EQ(PercentReduction(8, 9), -12.5);
}

TEST(ValidatePipelineConfigTest, Rejects) {
  EXPECT_TRUE(ValidatePipelineConfig(Quick()).ok());
  PipelineConfig c = Quick();
  c.tabu_rounds = -1;
  EXPECT_FALSE(ValidatePipelineConfig(c).ok());
  c = Quick();
  c.minimize_seconds = -1;
  EXPECT_FALSE(ValidatePipelineConfig(c).ok());
  c = Quick();
  c.workers = 0;
  EXPECT_FALSE(ValidatePipelineConfig(c).ok());
}

TEST(RunPipelineTest, TinyInstancesSucceed) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = Tiny(seed);
    PipelineConfig config = Quick();
    config.seed = seed;
    const PipelineResult r = Unwrap(RunPipeline(inst, config));
    EXPECT_TRUE(r.success());
    EXPECT_EQ(r.rounds.size(), 1u);
    EXPECT_TRUE(ValidateSectioning(inst, r.sectioning).empty());
    EXPECT_TRUE(CheckStructure(inst, r.timetable).empty());
    EXPECT_LE(r.bench.minimized_weighted, r.bench.greedy_weighted);
    EXPECT_EQ(r.bench.timetable_objective, r.report.total);
  }
}

TEST(RunPipelineTest, UnavoidableClashFailsAndReports) {
  const Instance inst = Overfull();
  PipelineConfig config = Quick();
  config.tabu_rounds = 0;
  const PipelineResult r = Unwrap(RunPipeline(inst, config));
  EXPECT_FALSE(r.success());
  EXPECT_GE(r.report.clash_count(), 1);
  EXPECT_EQ(r.rounds.size(), 1u);
  EXPECT_LT(r.bench.seconds_to_zero, 0);
  EXPECT_FALSE(r.tabu.empty());

  const std::filesystem::path dir =
      std::filesystem::path(::testing::TempDir()) / "sectime_overfull";
  std::filesystem::remove_all(dir);
  ASSERT_TRUE(WritePipelineArtifacts(inst, r, dir.string()).ok());
  for (const char* name : {kSectioningFile, kTimetableFile, kReportFile,
                           kTabuFile, kSummaryFile, kBenchRowFile}) {
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  }
  EXPECT_THAT(ReadFile(dir / kReportFile), HasSubstr("\"clashes\""));

  // More rounds cannot help; the last round is the result.
  config.tabu_rounds = 2;
  const PipelineResult more = Unwrap(RunPipeline(inst, config));
  EXPECT_FALSE(more.success());
  EXPECT_EQ(more.rounds.size(), 3u);
  EXPECT_EQ(more.rounds.back().round, 2);
}

TEST(RunPipelineTest, DeterministicArtifacts) {
  const Instance inst = Tiny(3);
  const PipelineConfig config = Quick();
  std::vector<std::string> summaries;
  for (int run = 0; run < 2; ++run) {
    const PipelineResult r = Unwrap(RunPipeline(inst, config));
    const std::filesystem::path dir = std::filesystem::path(::testing::TempDir()) /
                                      ("sectime_det" + std::to_string(run));
    std::filesystem::remove_all(dir);
    ASSERT_TRUE(WritePipelineArtifacts(inst, r, dir.string()).ok());
    std::string all;
    for (const char* name : {kSectioningFile, kTimetableFile, kReportFile,
                             kTabuFile, kSummaryFile, kBenchRowFile}) {
      all += ReadFile(dir / name);
    }
    summaries.push_back(all);
  }
  EXPECT_EQ(summaries[0], summaries[1]);
}

TEST(RunBenchTest, ShapeOrderAndCsv) {
  BenchConfig config;
  config.presets = {"tiny"};
  config.minimize_budgets = {0.05, 0.1};
  config.repeats = 2;
  config.timetable_seconds = 0.5;
  const std::vector<BenchRow> rows = Unwrap(RunBench(config));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].minimize_seconds, 0.05);
  EXPECT_EQ(rows[1].minimize_seconds, 0.05);
  EXPECT_EQ(rows[2].minimize_seconds, 0.1);
  for (const BenchRow& r : rows) EXPECT_EQ(r.instance, "tiny");

  const std::string csv = FormatBenchCsv(rows);
  std::vector<std::string> lines =
      absl::StrSplit(csv, '\n', absl::SkipEmpty());
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0],
            "minimize_seconds,instance,greedy_edges,minimized_edges,"
            "edge_reduction_pct,greedy_weighted,minimized_weighted,"
            "weighted_reduction_pct,timetable_objective,seconds_to_zero");
  // The reduction columns follow from the count columns.
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f = absl::StrSplit(lines[i], ',');
    ASSERT_EQ(f.size(), 10u);
    double ge, me, er, gw, mw, wr;
    ASSERT_TRUE(absl::SimpleAtod(f[2], &ge) && absl::SimpleAtod(f[3], &me) &&
                absl::SimpleAtod(f[4], &er) && absl::SimpleAtod(f[5], &gw) &&
                absl::SimpleAtod(f[6], &mw) && absl::SimpleAtod(f[7], &wr));
    EXPECT_NEAR(er, std::round(10000.0 * (ge - me) / ge) / 100.0, 1e-9);
    EXPECT_NEAR(wr, std::round(10000.0 * (gw - mw) / gw) / 100.0, 1e-9);
  }
  EXPECT_EQ(FormatBenchCsv(Unwrap(RunBench(config))), csv);
  const std::string table = FormatBenchTable(rows);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 5);
  EXPECT_FALSE(RunBench(BenchConfig{{"nope"}, {1.0}, 1}).ok());
}

}  // namespace
}  // namespace sectime
