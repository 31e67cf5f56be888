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

#include <algorithm>
#include <cstdint>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "sectime/timetable.h"

namespace sectime {
namespace {

bool IsValidId(absl::string_view id) {
  if (id.empty()) return false;
  for (const char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

template <typename T>
absl::Status IndexIds(const std::vector<T>& items, absl::string_view kind,
                      absl::flat_hash_map<std::string, int>* index) {
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    const std::string& id = items[i].id;
    if (!IsValidId(id)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "invariant violation: id_format: ", kind, " id '", id,
          "' must be non-empty and free of whitespace"));
    }
    if (!index->emplace(id, i).second) {
      return absl::FailedPreconditionError(absl::StrCat(
          "invariant violation: duplicate_id: ", kind, " '", id, "'"));
    }
  }
  return absl::OkStatus();
}

int Lookup(const absl::flat_hash_map<std::string, int>& index,
           absl::string_view id) {
  const auto it = index.find(id);
  return it == index.end() ? -1 : it->second;
}

absl::Status UnknownReference(absl::string_view owner_kind,
                              absl::string_view owner, absl::string_view field,
                              absl::string_view target) {
  return absl::NotFoundError(absl::StrCat("reference error: ", owner_kind,
                                          " '", owner, "' field ", field,
                                          " names unknown id '", target, "'"));
}

}  // namespace

std::vector<int> PeriodGrid::TeachingPeriods() const {
  std::vector<int> periods;
  for (int p = 0; p < periods_per_day; ++p) {
    if (!IsLunch(p)) periods.push_back(p);
  }
  return periods;
}

std::string FormatViolations(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    absl::StrAppend(&out, v.rule, " [", absl::StrJoin(v.ids, ","), "]");
    if (!v.detail.empty()) absl::StrAppend(&out, ": ", v.detail);
    out.push_back('\n');
  }
  return out;
}

absl::StatusOr<Instance> Instance::Create(InstanceData data) {
  Instance inst;
  inst.data_ = std::move(data);
  const InstanceData& d = inst.data_;

  if (absl::Status s = IndexIds(d.sections, "section", &inst.section_index_);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = IndexIds(d.courses, "course", &inst.course_index_);
      !s.ok()) {
    return s;
  }
  if (absl::Status s =
          IndexIds(d.professors, "professor", &inst.professor_index_);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = IndexIds(d.rooms, "room", &inst.room_index_); !s.ok()) {
    return s;
  }
  if (absl::Status s =
          IndexIds(d.major_groups, "major_group", &inst.group_index_);
      !s.ok()) {
    return s;
  }

  // Room-types in order of first appearance: rooms first, then any type only
  // named by a section (such types have no rooms and fail validation).
  absl::flat_hash_map<std::string, int> type_index;
  auto type_of = [&](const std::string& name) {
    auto [it, inserted] =
        type_index.emplace(name, static_cast<int>(inst.room_types_.size()));
    if (inserted) {
      inst.room_types_.push_back(name);
      inst.room_type_rooms_.emplace_back();
    }
    return it->second;
  };
  for (int r = 0; r < static_cast<int>(d.rooms.size()); ++r) {
    if (d.rooms[r].room_type.empty()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "invariant violation: id_format: room '", d.rooms[r].id,
          "' has an empty room_type"));
    }
    inst.room_type_rooms_[type_of(d.rooms[r].room_type)].push_back(r);
  }

  const int n = static_cast<int>(d.sections.size());
  inst.section_course_.resize(n);
  inst.section_professor_.resize(n);
  inst.section_room_type_.resize(n);
  inst.section_parent_.assign(n, -1);
  inst.section_children_.assign(n, {});
  inst.course_sections_.assign(d.courses.size(), {});
  inst.professor_sections_.assign(d.professors.size(), {});
  for (int s = 0; s < n; ++s) {
    const Section& sec = d.sections[s];
    const int c = Lookup(inst.course_index_, sec.course_id);
    if (c < 0) {
      return UnknownReference("section", sec.id, "course_id", sec.course_id);
    }
    const int p = Lookup(inst.professor_index_, sec.professor_id);
    if (p < 0) {
      return UnknownReference("section", sec.id, "professor_id",
                              sec.professor_id);
    }
    if (sec.room_type.empty()) {
      return absl::FailedPreconditionError(
          absl::StrCat("invariant violation: id_format: section '", sec.id,
                       "' has an empty room_type"));
    }
    inst.section_course_[s] = c;
    inst.section_professor_[s] = p;
    inst.section_room_type_[s] = type_of(sec.room_type);
    inst.course_sections_[c].push_back(s);
    inst.professor_sections_[p].push_back(s);
  }
  for (int s = 0; s < n; ++s) {
    const Section& sec = d.sections[s];
    if (!sec.parent_id.has_value()) continue;
    const int parent = Lookup(inst.section_index_, *sec.parent_id);
    if (parent < 0) {
      return UnknownReference("section", sec.id, "parent_id", *sec.parent_id);
    }
    inst.section_parent_[s] = parent;
    inst.section_children_[parent].push_back(s);
  }

  inst.group_courses_.reserve(d.major_groups.size());
  for (const MajorGroup& group : d.major_groups) {
    std::vector<int> courses;
    for (const std::string& cid : group.required_course_ids) {
      const int c = Lookup(inst.course_index_, cid);
      if (c < 0) {
        return UnknownReference("major_group", group.id,
                                "required_course_ids", cid);
      }
      courses.push_back(c);
    }
    std::sort(courses.begin(), courses.end());
    if (std::adjacent_find(courses.begin(), courses.end()) != courses.end()) {
      return absl::FailedPreconditionError(
          absl::StrCat("invariant violation: duplicate_id: major_group '",
                       group.id, "' lists a required course twice"));
    }
    inst.group_courses_.push_back(std::move(courses));
  }

  if (d.common_section_id.has_value()) {
    inst.common_section_ = Lookup(inst.section_index_, *d.common_section_id);
    if (inst.common_section_ < 0) {
      return UnknownReference("instance", "-", "common_section_id",
                              *d.common_section_id);
    }
  }

  inst.students_ = ExpandStudents(inst);
  for (int g = 0; g < static_cast<int>(inst.students_.size()); ++g) {
    inst.student_index_.emplace(inst.students_[g].id, g);
  }
  return inst;
}

int Instance::SectionIndex(absl::string_view id) const {
  return Lookup(section_index_, id);
}
int Instance::CourseIndex(absl::string_view id) const {
  return Lookup(course_index_, id);
}
int Instance::ProfessorIndex(absl::string_view id) const {
  return Lookup(professor_index_, id);
}
int Instance::RoomIndex(absl::string_view id) const {
  return Lookup(room_index_, id);
}
int Instance::StudentIndex(absl::string_view id) const {
  return Lookup(student_index_, id);
}
int Instance::GroupIndex(absl::string_view id) const {
  return Lookup(group_index_, id);
}

std::vector<Student> ExpandStudents(const Instance& instance) {
  std::vector<Student> students;
  const auto& groups = instance.major_groups();
  for (int m = 0; m < static_cast<int>(groups.size()); ++m) {
    for (int k = 0; k < groups[m].size; ++k) {
      students.push_back(Student{absl::StrCat(groups[m].id, "#", k), m,
                                 instance.group_courses(m)});
    }
  }
  return students;
}

std::vector<Violation> Validate(const Instance& instance) {
  std::vector<Violation> out;
  auto add = [&out](std::string rule, std::vector<std::string> ids,
                    std::string detail) {
    out.push_back(Violation{std::move(rule), std::move(ids), std::move(detail)});
  };
  const PeriodGrid& grid = instance.grid();
  if (grid.days < 1) add("grid_days", {}, "days must be at least 1");
  if (grid.periods_per_day < 1) {
    add("grid_periods", {}, "periods_per_day must be at least 1");
  }
  if (grid.lunch_period.has_value() &&
      (*grid.lunch_period < 0 || *grid.lunch_period >= grid.periods_per_day)) {
    add("lunch_range", {},
        absl::StrCat("lunch_period ", *grid.lunch_period, " outside [0, ",
                     grid.periods_per_day, ")"));
  }
  const bool grid_ok = out.empty();
  const int teaching_slots =
      grid_ok ? grid.days * static_cast<int>(grid.TeachingPeriods().size()) : 0;

  for (const Professor& p : instance.professors()) {
    if (p.requested_day_off.has_value() &&
        (*p.requested_day_off < 0 || *p.requested_day_off >= grid.days)) {
      add("day_off_range", {p.id},
          absl::StrCat("requested_day_off ", *p.requested_day_off,
                       " outside the grid"));
    }
  }

  const auto& sections = instance.sections();
  for (int s = 0; s < instance.num_sections(); ++s) {
    const Section& sec = sections[s];
    if (instance.room_type_size(instance.room_type_of(s)) == 0) {
      add("room_type_empty", {sec.id, sec.room_type},
          "room_type names no room");
    }
    if (sec.capacity < 1) add("capacity_positive", {sec.id}, "capacity < 1");
    if (sec.meetings_per_week < 1) {
      add("meetings_positive", {sec.id}, "meetings_per_week < 1");
    }
    if (sec.is_extended &&
        (sec.meetings_per_week < 2 || sec.meetings_per_week > 4)) {
      add("extended_meetings", {sec.id},
          "extended sections meet for 2, 3 or 4 contiguous periods");
    }
    if (grid_ok && sec.is_extended && sec.meetings_per_week >= 2 &&
        sec.meetings_per_week <= 4 && BlockStarts(grid, sec.meetings_per_week)
                                          .empty()) {
      add("extended_no_window", {sec.id},
          absl::StrCat("no lunch-legal window of ", sec.meetings_per_week,
                       " periods"));
    }
    if (grid_ok && !sec.is_extended && sec.meetings_per_week > teaching_slots) {
      add("meetings_exceed_grid", {sec.id},
          absl::StrCat(sec.meetings_per_week, " meetings but only ",
                       teaching_slots, " teaching slots"));
    }
    const int parent = instance.parent_of(s);
    if (parent >= 0) {
      const Section& par = sections[parent];
      if (parent == s) {
        add("grandchild", {sec.id}, "section is its own parent");
      } else if (instance.parent_of(parent) >= 0) {
        add("grandchild", {sections[instance.parent_of(parent)].id, par.id,
                           sec.id},
            "parent chain longer than one generation");
      }
      if (par.capacity != sec.capacity) {
        add("family_capacity_mismatch", {par.id, sec.id},
            absl::StrCat("parent capacity ", par.capacity,
                         " != child capacity ", sec.capacity));
      }
      if (instance.course_of(parent) == instance.course_of(s)) {
        add("family_same_course", {par.id, sec.id},
            "parent and child belong to the same course");
      }
    }
  }

  // Demand per course.
  std::vector<int64_t> demand(instance.num_courses(), 0);
  int64_t total_students = 0;
  const auto& groups = instance.major_groups();
  for (int m = 0; m < static_cast<int>(groups.size()); ++m) {
    const MajorGroup& group = groups[m];
    if (group.size < 1) add("group_size", {group.id}, "size < 1");
    total_students += std::max(0, group.size);
    const std::vector<int>& required = instance.group_courses(m);
    for (const int c : required) {
      demand[c] += std::max(0, group.size);
      for (const int s : instance.sections_of_course(c)) {
        const int parent = instance.parent_of(s);
        if (parent < 0) continue;
        const int pc = instance.course_of(parent);
        if (!std::binary_search(required.begin(), required.end(), pc)) {
          add("group_missing_parent_course",
              {group.id, instance.courses()[c].id,
               instance.courses()[pc].id},
              "a required course has child sections whose parent course is "
              "not required");
          break;
        }
      }
    }
  }
  for (int c = 0; c < instance.num_courses(); ++c) {
    if (demand[c] == 0) continue;
    int64_t supply = 0;
    for (const int s : instance.sections_of_course(c)) {
      supply += std::max(0, sections[s].capacity);
    }
    if (supply < demand[c]) {
      add("insufficient_capacity", {instance.courses()[c].id},
          absl::StrCat(supply, " < ", demand[c]));
    }
  }

  const int common = instance.common_section();
  if (common >= 0) {
    const Section& sec = sections[common];
    if (sec.capacity < total_students) {
      add("common_section_capacity", {sec.id},
          absl::StrCat(sec.capacity, " < ", total_students, " students"));
    }
    const int c = instance.course_of(common);
    bool universal = instance.sections_of_course(c).size() == 1;
    for (int m = 0; m < static_cast<int>(groups.size()) && universal; ++m) {
      const auto& req = instance.group_courses(m);
      universal = std::binary_search(req.begin(), req.end(), c);
    }
    if (!universal) {
      add("common_section_not_universal", {sec.id},
          "the common section must be the only section of a course every "
          "major-group requires");
    }
  }
  return out;
}

}  // namespace sectime
