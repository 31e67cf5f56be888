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

#ifndef SECTIME_TIMETABLE_SOLVER_H_
#define SECTIME_TIMETABLE_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "sectime/conflict_graph.h"
#include "sectime/instance.h"
#include "sectime/timetable.h"

namespace sectime {

struct SolveOptions {
  // Budget in deterministic seconds (see work_clock.h).
  double budget_seconds = 10.0;
  // Optional cap on iterations; negative means none.
  int64_t max_iterations = -1;
  uint64_t seed = 1;
  int workers = 1;
  // Sections to place. Absent means every section.
  std::optional<std::vector<int>> restrict;
  // Sections placed here keep their slots and are scored but never moved.
  std::optional<Timetable> fixed;
  // Starting slots for movable sections; structurally broken entries are
  // ignored.
  std::optional<Timetable> warm;
};

struct SolveResult {
  // Slots only (no rooms). Sections outside the restricted and fixed sets
  // are unplaced.
  Timetable timetable;
  ConflictReport report;
  int64_t iterations = 0;
  double seconds = 0.0;
};

// Min-conflicts local search over slot placements: single-meeting moves for
// ordinary sections, whole-block moves between legal starts for extended
// ones, a short tabu tenure, random walk and restarts from the best
// placement. Stops early at objective 0. The report is recomputed by Score()
// and must agree with the incremental objective.
absl::StatusOr<SolveResult> Solve(const Instance& instance,
                                  const ConflictGraph& graph,
                                  const SoftWeights& weights,
                                  const SolveOptions& options);

struct RoomAssignment {
  Timetable timetable;
  // Sum over (day, period, room) of occupants beyond the first.
  int64_t double_bookings = 0;
  // Sum over (day, period, room-type) of demand beyond supply; no assignment
  // can do better.
  int64_t lower_bound = 0;
};

// Gives every meeting a room of its section's room-type; an extended block
// keeps one room. Per (day, room-type) the meetings are intervals: greedy
// interval partitioning is exact when supply suffices, and small overloaded
// groups are solved exactly by branch and bound.
absl::StatusOr<RoomAssignment> AssignRooms(const Instance& instance,
                                           const Timetable& timetable);

struct PhasedOptions {
  double phase_a_seconds = 5.0;
  double phase_b_seconds = 10.0;
  uint64_t seed = 1;
  int workers = 1;
  // Optional warm start for both phases.
  std::optional<Timetable> warm;
};

struct PhasedResult {
  // Extended sections and the common section only.
  Timetable phase_a;
  // Every section, with rooms.
  Timetable timetable;
  ConflictReport report;
  RoomAssignment rooms;
  double seconds = 0.0;
};

// Phase A places the extended sections and the common section, phase B the
// rest around the fixed phase-A slots, phase C assigns rooms. Phase B gets
// half of its budget; if it ends above zero the remainder goes to a search
// over all sections started from the phase-B result.
absl::StatusOr<PhasedResult> PhasedSolve(const Instance& instance,
                                         const ConflictGraph& graph,
                                         const SoftWeights& weights,
                                         const PhasedOptions& options);

}  // namespace sectime

#endif  // SECTIME_TIMETABLE_SOLVER_H_
