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

#include "sectime/instance.h"

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sectime/generator.h"
#include "test_util.h"

namespace sectime {
namespace {

using ::sectime::testing::DataBuilder;
using ::testing::HasSubstr;

bool HasRule(const std::vector<Violation>& v, const std::string& rule) {
  for (const Violation& x : v) {
    if (x.rule == rule) return true;
  }
  return false;
}

constexpr char kMinimal[] = R"({
  "grid": {"days": 1, "periods_per_day": 1},
  "rooms": [{"id": "R", "room_type": "room"}],
  "professors": [{"id": "P"}],
  "courses": [{"id": "C"}],
  "sections": [{"id": "S", "course_id": "C", "capacity": 1,
                "professor_id": "P", "room_type": "room",
                "meetings_per_week": 1, "is_extended": false}],
  "major_groups": [{"id": "G", "size": 1, "required_course_ids": ["C"]}]
})";

TEST(ParseInstanceTest, MinimalDocument) {
  absl::StatusOr<Instance> inst = ParseInstance(kMinimal);
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_EQ(inst->num_students(), 1);
  EXPECT_EQ(inst->num_sections(), 1);
  EXPECT_FALSE(inst->grid().lunch_period.has_value());
}

TEST(ParseInstanceTest, UnknownCourseReference) {
  std::string doc = kMinimal;
  doc.replace(doc.find("\"course_id\": \"C\""), 16, "\"course_id\": \"X\"");
  absl::StatusOr<Instance> inst = ParseInstance(doc);
  ASSERT_FALSE(inst.ok());
  EXPECT_EQ(inst.status().code(), absl::StatusCode::kNotFound);
  EXPECT_THAT(std::string(inst.status().message()), HasSubstr("'X'"));
}

TEST(ParseInstanceTest, SyntaxErrorReportsPosition) {
  absl::StatusOr<Instance> inst = ParseInstance("{\"grid\": [1, 2");
  ASSERT_FALSE(inst.ok());
  EXPECT_EQ(inst.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(std::string(inst.status().message()), HasSubstr("byte"));
}

TEST(ParseInstanceTest, UnknownKeyRejected) {
  std::string doc = kMinimal;
  doc.replace(doc.find("\"days\""), 6, "\"dayz\"");
  EXPECT_FALSE(ParseInstance(doc).ok());
}

TEST(ParseInstanceTest, GrandchildIsAnInvariantViolation) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt)
      .AddRoom("R", "room")
      .AddProfessor("P")
      .AddCourse("A")
      .AddCourse("B")
      .AddCourse("C")
      .AddSection("s1", "A", 5, "P", "room")
      .AddSection("s2", "B", 5, "P", "room", 1, false, "s1")
      .AddSection("s3", "C", 5, "P", "room", 1, false, "s2")
      .AddGroup("G", 1, {"A", "B", "C"});
  absl::StatusOr<Instance> inst =
      ParseInstance(SerializeInstance(b.Build()));
  ASSERT_FALSE(inst.ok());
  EXPECT_THAT(std::string(inst.status().message()), HasSubstr("grandchild"));
}

TEST(ValidateTest, InsufficientCapacity) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt)
      .AddRoom("R", "room")
      .AddProfessor("P")
      .AddCourse("C")
      .AddSection("c1", "C", 10, "P", "room")
      .AddSection("c2", "C", 10, "P", "room")
      .AddGroup("G", 30, {"C"});
  const std::vector<Violation> v = Validate(b.Make());
  ASSERT_TRUE(HasRule(v, "insufficient_capacity"));
  EXPECT_THAT(FormatViolations(v), HasSubstr("20 < 30"));
}

TEST(ValidateTest, FamilyCapacityMismatch) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt)
      .AddRoom("R", "room")
      .AddProfessor("P")
      .AddCourse("L")
      .AddCourse("B")
      .AddSection("lec", "L", 20, "P", "room")
      .AddSection("lab", "B", 15, "P", "room", 1, false, "lec")
      .AddGroup("G", 5, {"L", "B"});
  EXPECT_TRUE(HasRule(Validate(b.Make()), "family_capacity_mismatch"));
}

TEST(ValidateTest, OtherRules) {
  DataBuilder b;
  b.Grid(1, 4, 1)
      .AddRoom("R", "room")
      .AddProfessor("P", 3)
      .AddCourse("A")
      .AddCourse("B")
      .AddSection("a", "A", 2, "P", "room", 4, true)
      .AddSection("b", "B", 2, "P", "room", 1, false, "a")
      .AddSection("bb", "B", 1, "P", "room")
      .AddGroup("G", 1, {"B"});
  const std::vector<Violation> v = Validate(b.Make());
  EXPECT_TRUE(HasRule(v, "day_off_range"));
  EXPECT_TRUE(HasRule(v, "extended_no_window"));
  EXPECT_TRUE(HasRule(v, "group_missing_parent_course"));
}

TEST(ValidateTest, CommonSectionMustSeatEveryone) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt)
      .AddRoom("R", "room")
      .AddProfessor("P")
      .AddCourse("ASM")
      .AddSection("asm", "ASM", 2, "P", "room")
      .AddGroup("G", 2, {"ASM"})
      .AddGroup("H", 1, {})
      .Common("asm");
  EXPECT_TRUE(HasRule(Validate(b.Make()), "common_section_capacity"));
}

TEST(ExpandStudentsTest, GroupOfSeven) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt)
      .AddRoom("R", "room")
      .AddProfessor("P")
      .AddCourse("A")
      .AddCourse("B")
      .AddSection("a", "A", 7, "P", "room")
      .AddSection("b", "B", 7, "P", "room")
      .AddGroup("1MC", 7, {"B", "A"});
  const Instance inst = b.Make();
  const std::vector<Student> students = ExpandStudents(inst);
  ASSERT_EQ(students.size(), 7u);
  for (int k = 0; k < 7; ++k) {
    EXPECT_EQ(students[k].id, "1MC#" + std::to_string(k));
    EXPECT_EQ(students[k].courses, (std::vector<int>{0, 1}));
  }
}

TEST(ExpandStudentsTest, EmptyAndTwoGroups) {
  DataBuilder empty;
  empty.Grid(1, 1, std::nullopt);
  EXPECT_TRUE(ExpandStudents(empty.Make()).empty());

  DataBuilder b;
  b.Grid(1, 4, std::nullopt)
      .AddRoom("R", "room")
      .AddProfessor("P")
      .AddCourse("A")
      .AddSection("a", "A", 14, "P", "room")
      .AddGroup("4EX", 3, {"A"})
      .AddGroup("4EY", 11, {"A"});
  const std::vector<Student> students = ExpandStudents(b.Make());
  ASSERT_EQ(students.size(), 14u);
  EXPECT_EQ(students[2].id, "4EX#2");
  EXPECT_EQ(students[3].id, "4EY#0");
  EXPECT_EQ(students[13].id, "4EY#10");
}

TEST(SerializeInstanceTest, RoundTripIsIdentity) {
  for (const std::string preset : {"easy", "tiny"}) {
    GeneratorSpec spec;
    spec.preset = preset;
    absl::StatusOr<InstanceData> data = GenerateInstance(spec, 5);
    ASSERT_TRUE(data.ok()) << data.status();
    const std::string text = SerializeInstance(*data);
    absl::StatusOr<Instance> parsed = ParseInstance(text);
    ASSERT_TRUE(parsed.ok()) << parsed.status();
    EXPECT_EQ(parsed->data(), *data);
    EXPECT_EQ(SerializeInstance(parsed->data()), text);
  }
}

TEST(SerializeInstanceTest, CustomWeightsSurvive) {
  DataBuilder b;
  b.Grid(2, 3, 1).AddRoom("R", "room").AddProfessor("P", 1).AddCourse("A");
  b.AddSection("a", "A", 1, "P", "room").AddGroup("G", 1, {"A"});
  b.data().edge_weights = {2, 3, 5, 11};
  b.data().soft_weights.room_overflow = 5;
  absl::StatusOr<Instance> parsed = ParseInstance(SerializeInstance(b.Build()));
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(parsed->edge_weights(), (EdgeWeights{2, 3, 5, 11}));
  EXPECT_EQ(parsed->soft_weights().room_overflow, 5);
}

class GeneratorPresetTest : public ::testing::TestWithParam<std::string> {};

TEST_P(GeneratorPresetTest, HundredSeedsValidate) {
  const std::string preset = GetParam();
  const int target = PresetTargetSections(preset);
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorSpec spec;
    spec.preset = preset;
    absl::StatusOr<InstanceData> data = GenerateInstance(spec, seed);
    ASSERT_TRUE(data.ok()) << preset << " seed " << seed << ": "
                           << data.status();
    absl::StatusOr<Instance> inst = Instance::Create(*data);
    ASSERT_TRUE(inst.ok()) << inst.status();
    const std::vector<Violation> v = Validate(*inst);
    EXPECT_TRUE(v.empty()) << preset << " seed " << seed << ": "
                           << FormatViolations(v);
    const int n = inst->num_sections();
    if (target > 0) {
      EXPECT_GE(n, target * 0.9) << preset << " seed " << seed;
      EXPECT_LE(n, target * 1.1) << preset << " seed " << seed;
    } else {
      EXPECT_LE(n, 12);
      EXPECT_LE(inst->num_students(), 8);
    }
    EXPECT_GE(inst->common_section(), 0);
  }
}

TEST_P(GeneratorPresetTest, Deterministic) {
  GeneratorSpec spec;
  spec.preset = GetParam();
  absl::StatusOr<InstanceData> a = GenerateInstance(spec, 1);
  absl::StatusOr<InstanceData> b = GenerateInstance(spec, 1);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(SerializeInstance(*a), SerializeInstance(*b));
}

INSTANTIATE_TEST_SUITE_P(Presets, GeneratorPresetTest,
                         ::testing::Values("easy", "medium", "medium2", "hard",
                                           "tiny"));

TEST(GeneratorTest, LargePresetFeatures) {
  GeneratorSpec spec;
  spec.preset = "medium";
  const Instance inst = testing::Unwrap(
      Instance::Create(testing::Unwrap(GenerateInstance(spec, 3))));
  int extended = 0, children = 0, singletons = 0;
  for (int s = 0; s < inst.num_sections(); ++s) {
    extended += inst.is_extended(s);
    children += inst.parent_of(s) >= 0;
  }
  for (const MajorGroup& g : inst.major_groups()) singletons += g.size == 1;
  EXPECT_GT(extended, 0);
  EXPECT_GT(children, 0);
  EXPECT_GT(singletons, 0);
  // Core courses are shared across major-groups of a year.
  int sharing = 0;
  for (const MajorGroup& g : inst.major_groups()) {
    for (const std::string& c : g.required_course_ids) sharing += c == "CORE11";
  }
  EXPECT_GT(sharing, 2);
}

TEST(GeneratorTest, UnknownPreset) {
  GeneratorSpec spec;
  spec.preset = "enormous";
  EXPECT_EQ(GenerateInstance(spec, 1).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(GeneratorTest, TargetOverride) {
  GeneratorSpec spec;
  spec.preset = "easy";
  spec.target_sections = 150;
  absl::StatusOr<InstanceData> data = GenerateInstance(spec, 2);
  ASSERT_TRUE(data.ok()) << data.status();
  EXPECT_NEAR(static_cast<double>(data->sections.size()), 150.0, 20.0);
}

}  // namespace
}  // namespace sectime
