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

// Sectionings and the student conflict graph (SCG) they induce.

#ifndef SECTIME_CONFLICT_GRAPH_H_
#define SECTIME_CONFLICT_GRAPH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sectime/instance.h"

namespace sectime {

// Assignment of each (student, required course) pair to a section. Row g is
// aligned with instance.students()[g].courses; -1 marks a missing assignment.
class Sectioning {
 public:
  Sectioning() = default;
  explicit Sectioning(const Instance& instance);

  int num_students() const { return static_cast<int>(rows_.size()); }
  // Section for the k-th required course of student g.
  int at(int student, int k) const { return rows_[student][k]; }
  void set(int student, int k, int section) { rows_[student][k] = section; }
  const std::vector<int>& row(int student) const { return rows_[student]; }

  // Section assigned to (student, course index), or -1.
  int SectionFor(const Instance& instance, int student, int course) const;
  void Assign(const Instance& instance, int student, int course, int section);

  // Sorted assigned sections of a student.
  std::vector<int> Schedule(int student) const;

  bool operator==(const Sectioning&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

enum EdgeKind : uint8_t {
  kProfessorEdge = 1,
  kSingleRoomEdge = 2,
  kStudentEdge = 4,
};

std::string EdgeKindLabel(uint8_t kinds);

// Undirected simple graph over section indices. A pair joined for several
// reasons is one edge carrying several kind bits.
class ConflictGraph {
 public:
  struct Edge {
    int s;
    int t;
    uint8_t kinds;
    bool operator==(const Edge&) const = default;
  };

  explicit ConflictGraph(int num_vertices = 0);

  int num_vertices() const { return n_; }
  void AddEdge(int s, int t, uint8_t kinds);
  uint8_t Kinds(int s, int t) const {
    return kinds_[static_cast<size_t>(s) * n_ + t];
  }
  bool HasEdge(int s, int t) const { return Kinds(s, t) != 0; }
  int64_t num_edges() const { return num_edges_; }

  // Edges with s < t in lexicographic order.
  std::vector<Edge> Edges() const;
  std::vector<std::vector<int>> AdjacencyLists() const;

  bool operator==(const ConflictGraph&) const = default;

 private:
  int n_ = 0;
  int64_t num_edges_ = 0;
  std::vector<uint8_t> kinds_;
};

// Professor and single-room edges only.
ConflictGraph BaseScg(const Instance& instance);

// Base graph plus one student edge per pair of sections sharing a student.
absl::StatusOr<ConflictGraph> ScgOf(const Instance& instance,
                                    const Sectioning& sectioning);

int64_t EdgeCount(const ConflictGraph& graph);

// Weight of a section pair by its number of extended endpoints.
double PairWeight(const Instance& instance, const EdgeWeights& weights, int s,
                  int t);
double WeightedEdgeCount(const ConflictGraph& graph, const Instance& instance,
                         const EdgeWeights& weights);

// Empty iff the sectioning is total on the required (student, course) pairs,
// uses sections of the right course, respects capacities, and enrolls every
// student of a child section in its parent.
std::vector<Violation> ValidateSectioning(const Instance& instance,
                                          const Sectioning& sectioning);

// Partition of the students into blocks with identical schedules. Blocks are
// ordered by their first student; students ascend inside a block.
absl::StatusOr<std::vector<std::vector<int>>> Divisions(
    const Instance& instance, const Sectioning& sectioning);

// "<group>.<k>" with k counting the divisions of that group from 1.
std::vector<std::string> DivisionNames(
    const Instance& instance, const std::vector<std::vector<int>>& divisions);

// Sectioning document: "student course section" lines sorted by byte order.
std::string SerializeSectioning(const Instance& instance,
                                const Sectioning& sectioning);
absl::StatusOr<Sectioning> ParseSectioning(const Instance& instance,
                                           absl::string_view text);

// Edge list for debugging: "s t kind[+kind...]" per line.
std::string SerializeEdgeList(const Instance& instance,
                              const ConflictGraph& graph);

}  // namespace sectime

#endif  // SECTIME_CONFLICT_GRAPH_H_
