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

#include "sectime/conflict_graph.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace sectime {

Sectioning::Sectioning(const Instance& instance) {
  rows_.reserve(instance.num_students());
  for (const Student& g : instance.students()) {
    rows_.emplace_back(g.courses.size(), -1);
  }
}

int Sectioning::SectionFor(const Instance& instance, int student,
                           int course) const {
  const std::vector<int>& courses = instance.students()[student].courses;
  const auto it = std::lower_bound(courses.begin(), courses.end(), course);
  if (it == courses.end() || *it != course) return -1;
  return rows_[student][it - courses.begin()];
}

void Sectioning::Assign(const Instance& instance, int student, int course,
                        int section) {
  const std::vector<int>& courses = instance.students()[student].courses;
  const auto it = std::lower_bound(courses.begin(), courses.end(), course);
  if (it != courses.end() && *it == course) {
    rows_[student][it - courses.begin()] = section;
  }
}

std::vector<int> Sectioning::Schedule(int student) const {
  std::vector<int> out;
  for (const int s : rows_[student]) {
    if (s >= 0) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string EdgeKindLabel(uint8_t kinds) {
  std::string out;
  auto add = [&out](const char* label) {
    if (!out.empty()) out.push_back('+');
    out += label;
  };
  if (kinds & kProfessorEdge) add("professor");
  if (kinds & kSingleRoomEdge) add("single_room");
  if (kinds & kStudentEdge) add("student");
  return out;
}

ConflictGraph::ConflictGraph(int num_vertices)
    : n_(num_vertices),
      kinds_(static_cast<size_t>(num_vertices) * num_vertices, 0) {}

void ConflictGraph::AddEdge(int s, int t, uint8_t kinds) {
  if (s == t || kinds == 0) return;
  uint8_t& a = kinds_[static_cast<size_t>(s) * n_ + t];
  uint8_t& b = kinds_[static_cast<size_t>(t) * n_ + s];
  if (a == 0) ++num_edges_;
  a |= kinds;
  b |= kinds;
}

std::vector<ConflictGraph::Edge> ConflictGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int s = 0; s < n_; ++s) {
    for (int t = s + 1; t < n_; ++t) {
      if (const uint8_t k = Kinds(s, t); k != 0) out.push_back({s, t, k});
    }
  }
  return out;
}

std::vector<std::vector<int>> ConflictGraph::AdjacencyLists() const {
  std::vector<std::vector<int>> adj(n_);
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      if (Kinds(s, t) != 0) adj[s].push_back(t);
    }
  }
  return adj;
}

ConflictGraph BaseScg(const Instance& instance) {
  const int n = instance.num_sections();
  ConflictGraph graph(n);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      uint8_t kinds = 0;
      if (instance.professor_of(s) == instance.professor_of(t)) {
        kinds |= kProfessorEdge;
      }
      if (instance.room_type_of(s) == instance.room_type_of(t) &&
          instance.room_type_size(instance.room_type_of(s)) == 1) {
        kinds |= kSingleRoomEdge;
      }
      graph.AddEdge(s, t, kinds);
    }
  }
  return graph;
}

absl::StatusOr<ConflictGraph> ScgOf(const Instance& instance,
                                    const Sectioning& sectioning) {
  const std::vector<Violation> violations =
      ValidateSectioning(instance, sectioning);
  if (!violations.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "invalid sectioning: ", FormatViolations(violations)));
  }
  ConflictGraph graph = BaseScg(instance);
  for (int g = 0; g < sectioning.num_students(); ++g) {
    const std::vector<int> sched = sectioning.Schedule(g);
    for (size_t i = 0; i < sched.size(); ++i) {
      for (size_t j = i + 1; j < sched.size(); ++j) {
        graph.AddEdge(sched[i], sched[j], kStudentEdge);
      }
    }
  }
  return graph;
}

int64_t EdgeCount(const ConflictGraph& graph) { return graph.num_edges(); }

double PairWeight(const Instance& instance, const EdgeWeights& weights, int s,
                  int t) {
  const int extended = (instance.is_extended(s) ? 1 : 0) +
                       (instance.is_extended(t) ? 1 : 0);
  return extended == 0 ? weights.a : extended == 1 ? weights.b : weights.c;
}

double WeightedEdgeCount(const ConflictGraph& graph, const Instance& instance,
                         const EdgeWeights& weights) {
  double total = 0.0;
  for (const ConflictGraph::Edge& e : graph.Edges()) {
    total += PairWeight(instance, weights, e.s, e.t);
  }
  return total;
}

std::vector<Violation> ValidateSectioning(const Instance& instance,
                                          const Sectioning& sectioning) {
  std::vector<Violation> out;
  const auto& students = instance.students();
  if (sectioning.num_students() != instance.num_students()) {
    out.push_back({"shape", {},
                   absl::StrCat("sectioning has ", sectioning.num_students(),
                                " students, instance has ",
                                instance.num_students())});
    return out;
  }
  const auto& sections = instance.sections();
  std::vector<int> load(instance.num_sections(), 0);
  for (int g = 0; g < instance.num_students(); ++g) {
    const Student& student = students[g];
    if (sectioning.row(g).size() != student.courses.size()) {
      out.push_back({"shape", {student.id}, "row length mismatch"});
      continue;
    }
    for (size_t k = 0; k < student.courses.size(); ++k) {
      const int c = student.courses[k];
      const int s = sectioning.at(g, k);
      if (s < 0) {
        out.push_back({"incomplete", {student.id, instance.courses()[c].id},
                       "no section assigned"});
        continue;
      }
      if (s >= instance.num_sections()) {
        out.push_back({"wrong_course", {student.id, instance.courses()[c].id},
                       "section index out of range"});
        continue;
      }
      if (instance.course_of(s) != c) {
        out.push_back({"wrong_course",
                       {student.id, instance.courses()[c].id, sections[s].id},
                       "section belongs to another course"});
        continue;
      }
      ++load[s];
    }
    for (size_t k = 0; k < student.courses.size(); ++k) {
      const int s = sectioning.at(g, k);
      if (s < 0 || s >= instance.num_sections()) continue;
      const int parent = instance.parent_of(s);
      if (parent < 0) continue;
      if (sectioning.SectionFor(instance, g, instance.course_of(parent)) !=
          parent) {
        out.push_back({"family", {student.id, sections[s].id, sections[parent].id},
                       "child section without its parent"});
      }
    }
  }
  for (int s = 0; s < instance.num_sections(); ++s) {
    if (load[s] > sections[s].capacity) {
      out.push_back({"capacity", {sections[s].id},
                     absl::StrCat(load[s], " students > capacity ",
                                  sections[s].capacity)});
    }
  }
  return out;
}

absl::StatusOr<std::vector<std::vector<int>>> Divisions(
    const Instance& instance, const Sectioning& sectioning) {
  const std::vector<Violation> violations =
      ValidateSectioning(instance, sectioning);
  if (!violations.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "invalid sectioning: ", FormatViolations(violations)));
  }
  // Keyed by group first: two groups may take the same courses.
  std::map<std::pair<int, std::vector<int>>, int> block_of;
  std::vector<std::vector<int>> blocks;
  const auto& students = instance.students();
  for (int g = 0; g < sectioning.num_students(); ++g) {
    auto [it, inserted] =
        block_of.emplace(std::make_pair(students[g].group, sectioning.Schedule(g)),
                         static_cast<int>(blocks.size()));
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(g);
  }
  return blocks;
}

std::vector<std::string> DivisionNames(
    const Instance& instance, const std::vector<std::vector<int>>& divisions) {
  std::vector<int> seen(instance.major_groups().size(), 0);
  std::vector<std::string> names;
  names.reserve(divisions.size());
  for (const auto& block : divisions) {
    const int m = instance.students()[block.front()].group;
    names.push_back(
        absl::StrCat(instance.major_groups()[m].id, ".", ++seen[m]));
  }
  return names;
}

std::string SerializeSectioning(const Instance& instance,
                                const Sectioning& sectioning) {
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  const auto& students = instance.students();
  for (int g = 0; g < sectioning.num_students(); ++g) {
    for (size_t k = 0; k < students[g].courses.size(); ++k) {
      const int s = sectioning.at(g, k);
      if (s < 0) continue;
      rows.emplace_back(students[g].id,
                        instance.courses()[students[g].courses[k]].id,
                        instance.sections()[s].id);
    }
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [g, c, s] : rows) absl::StrAppend(&out, g, " ", c, " ", s, "\n");
  return out;
}

absl::StatusOr<Sectioning> ParseSectioning(const Instance& instance,
                                           absl::string_view text) {
  Sectioning sectioning(instance);
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, ' ', absl::SkipEmpty());
    if (fields.size() != 3) {
      return absl::InvalidArgumentError(absl::StrCat(
          "syntax error at line ", line_no, ": expected 'student course section'"));
    }
    const int g = instance.StudentIndex(fields[0]);
    const int c = instance.CourseIndex(fields[1]);
    const int s = instance.SectionIndex(fields[2]);
    if (g < 0 || c < 0 || s < 0) {
      return absl::NotFoundError(
          absl::StrCat("reference error at line ", line_no, ": unknown id in '",
                       line, "'"));
    }
    const auto& courses = instance.students()[g].courses;
    if (!std::binary_search(courses.begin(), courses.end(), c)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": student ", fields[0], " does not require ",
          fields[1]));
    }
    if (sectioning.SectionFor(instance, g, c) >= 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": duplicate assignment for ", fields[0], " ",
          fields[1]));
    }
    sectioning.Assign(instance, g, c, s);
  }
  return sectioning;
}

std::string SerializeEdgeList(const Instance& instance,
                              const ConflictGraph& graph) {
  std::string out;
  for (const ConflictGraph::Edge& e : graph.Edges()) {
    absl::StrAppend(&out, instance.sections()[e.s].id, " ",
                    instance.sections()[e.t].id, " ", EdgeKindLabel(e.kinds),
                    "\n");
  }
  return out;
}

}  // namespace sectime
