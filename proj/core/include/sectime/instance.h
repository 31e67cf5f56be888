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

// Problem instances for student sectioning and timetabling: the period grid,
// rooms grouped into room-types, professors, courses, sections (optionally
// organised in parent/child families), and major-groups of students with
// identical course requirements.

#ifndef SECTIME_INSTANCE_H_
#define SECTIME_INSTANCE_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace sectime {

struct PeriodGrid {
  int days = 5;
  int periods_per_day = 7;
  // Zero-based period excluded from teaching on every day.
  std::optional<int> lunch_period;

  // Periods of a day that may be used for teaching, ascending.
  std::vector<int> TeachingPeriods() const;
  bool IsLunch(int period) const {
    return lunch_period.has_value() && *lunch_period == period;
  }

  bool operator==(const PeriodGrid&) const = default;
};

struct Room {
  std::string id;
  std::string room_type;
  bool operator==(const Room&) const = default;
};

struct Professor {
  std::string id;
  std::optional<int> requested_day_off;
  bool operator==(const Professor&) const = default;
};

struct Course {
  std::string id;
  bool operator==(const Course&) const = default;
};

struct Section {
  std::string id;
  std::string course_id;
  int capacity = 1;
  std::string professor_id;
  std::string room_type;
  int meetings_per_week = 1;
  bool is_extended = false;
  std::optional<std::string> parent_id;
  bool operator==(const Section&) const = default;
};

struct MajorGroup {
  std::string id;
  int size = 1;
  std::vector<std::string> required_course_ids;
  bool operator==(const MajorGroup&) const = default;
};

// Weights of the sectioning objectives: a, b and c weigh a conflict-graph edge
// with zero, one and two extended endpoints; d is charged per tabu enrollment.
struct EdgeWeights {
  double a = 1.0;
  double b = 4.0;
  double c = 7.0;
  double d = 5.0;
  bool operator==(const EdgeWeights&) const = default;
};

// Soft-constraint weights of the timetabling objective.
struct SoftWeights {
  double clash = 1000.0;
  double common_multiplier = 10.0;
  double room_overflow = 100.0;
  double double_meeting = 10.0;
  double prof_day_off = 1.0;
  bool operator==(const SoftWeights&) const = default;
};

// Plain, uncross-linked description of an instance. This is what documents
// and the generator produce.
struct InstanceData {
  PeriodGrid grid;
  std::vector<Room> rooms;
  std::vector<Professor> professors;
  std::vector<Course> courses;
  std::vector<Section> sections;
  std::vector<MajorGroup> major_groups;
  std::optional<std::string> common_section_id;
  EdgeWeights edge_weights;
  SoftWeights soft_weights;
  bool operator==(const InstanceData&) const = default;
};

// One student expanded from a major-group. `courses` holds course indices in
// ascending order.
struct Student {
  std::string id;
  int group = 0;
  std::vector<int> courses;
};

// A broken rule together with the ids involved.
struct Violation {
  std::string rule;
  std::vector<std::string> ids;
  std::string detail;
};

std::string FormatViolations(const std::vector<Violation>& violations);

// Cross-linked, immutable instance. Entities are addressed by their position
// in the corresponding InstanceData vector.
class Instance {
 public:
  // Resolves every id reference. Fails with NotFound on an unknown reference
  // and with FailedPrecondition on duplicate or malformed ids. Semantic
  // invariants are not checked here; see Validate().
  static absl::StatusOr<Instance> Create(InstanceData data);

  const InstanceData& data() const { return data_; }
  const PeriodGrid& grid() const { return data_.grid; }
  const std::vector<Section>& sections() const { return data_.sections; }
  const std::vector<Course>& courses() const { return data_.courses; }
  const std::vector<Professor>& professors() const { return data_.professors; }
  const std::vector<Room>& rooms() const { return data_.rooms; }
  const std::vector<MajorGroup>& major_groups() const {
    return data_.major_groups;
  }
  const EdgeWeights& edge_weights() const { return data_.edge_weights; }
  const SoftWeights& soft_weights() const { return data_.soft_weights; }

  int num_sections() const { return static_cast<int>(data_.sections.size()); }
  int num_courses() const { return static_cast<int>(data_.courses.size()); }
  int num_students() const { return static_cast<int>(students_.size()); }
  int num_room_types() const { return static_cast<int>(room_types_.size()); }

  // Index lookups; -1 when the id is unknown.
  int SectionIndex(absl::string_view id) const;
  int CourseIndex(absl::string_view id) const;
  int ProfessorIndex(absl::string_view id) const;
  int RoomIndex(absl::string_view id) const;
  int StudentIndex(absl::string_view id) const;
  int GroupIndex(absl::string_view id) const;

  int course_of(int section) const { return section_course_[section]; }
  int professor_of(int section) const { return section_professor_[section]; }
  int room_type_of(int section) const { return section_room_type_[section]; }
  int parent_of(int section) const { return section_parent_[section]; }
  const std::vector<int>& children_of(int section) const {
    return section_children_[section];
  }
  bool is_extended(int section) const {
    return data_.sections[section].is_extended;
  }
  int capacity(int section) const { return data_.sections[section].capacity; }
  int meetings(int section) const {
    return data_.sections[section].meetings_per_week;
  }
  const std::vector<int>& sections_of_course(int course) const {
    return course_sections_[course];
  }
  const std::vector<int>& sections_of_professor(int professor) const {
    return professor_sections_[professor];
  }
  // Ascending course indices required by a major-group.
  const std::vector<int>& group_courses(int group) const {
    return group_courses_[group];
  }

  const std::vector<std::string>& room_type_names() const {
    return room_types_;
  }
  // Rooms of a room-type, ascending room index.
  const std::vector<int>& rooms_of_type(int room_type) const {
    return room_type_rooms_[room_type];
  }
  int room_type_size(int room_type) const {
    return static_cast<int>(room_type_rooms_[room_type].size());
  }

  const std::vector<Student>& students() const { return students_; }
  // Common section index or -1.
  int common_section() const { return common_section_; }

 private:
  Instance() = default;

  InstanceData data_;
  absl::flat_hash_map<std::string, int> section_index_;
  absl::flat_hash_map<std::string, int> course_index_;
  absl::flat_hash_map<std::string, int> professor_index_;
  absl::flat_hash_map<std::string, int> room_index_;
  absl::flat_hash_map<std::string, int> group_index_;
  absl::flat_hash_map<std::string, int> student_index_;
  std::vector<int> section_course_;
  std::vector<int> section_professor_;
  std::vector<int> section_room_type_;
  std::vector<int> section_parent_;
  std::vector<std::vector<int>> section_children_;
  std::vector<std::vector<int>> course_sections_;
  std::vector<std::vector<int>> professor_sections_;
  std::vector<std::vector<int>> group_courses_;
  std::vector<std::string> room_types_;
  std::vector<std::vector<int>> room_type_rooms_;
  std::vector<Student> students_;
  int common_section_ = -1;
};

// Checks every semantic invariant of an instance. Violations are data: an
// empty result means the instance is usable by all solvers.
std::vector<Violation> Validate(const Instance& instance);

// Students of all major-groups in group order, ids "<group>#<ordinal>".
std::vector<Student> ExpandStudents(const Instance& instance);

// Parses an instance document (JSON, see docs/formats.md), resolves references
// and enforces Validate(). Errors: InvalidArgument for syntax errors (with the
// byte offset), NotFound for unknown ids, FailedPrecondition naming the first
// violated rule.
absl::StatusOr<Instance> ParseInstance(absl::string_view text);

// Canonical document text. ParseInstance(SerializeInstance(x)) reproduces x.
std::string SerializeInstance(const InstanceData& data);

}  // namespace sectime

#endif  // SECTIME_INSTANCE_H_
