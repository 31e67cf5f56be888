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

// Period-grid timetables, their hard structure and soft-constraint scoring.
//
// A timetable places every meeting of a section on a (day, period) slot and
// optionally in a concrete room. Hard rules: exact meeting counts, no lunch,
// distinct slots, and extended sections as one contiguous same-day block that
// starts inside the lunch-legal window. Everything else (clashes along
// conflict-graph edges, room-type overflow, repeated same-day meetings,
// professor days off) is a weighted penalty.

#ifndef SECTIME_TIMETABLE_H_
#define SECTIME_TIMETABLE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sectime/conflict_graph.h"
#include "sectime/edge_minimizer.h"
#include "sectime/instance.h"

namespace sectime {

// Start periods (within one day) of a block of `length` consecutive periods
// that avoids lunch. Length 4 blocks are morning-only when a lunch period
// exists; lengths 2 and 3 may also start after lunch. Empty for lengths
// outside [2, 4].
std::vector<int> BlockStarts(const PeriodGrid& grid, int length);

struct Slot {
  int day = 0;
  int period = 0;
  auto operator<=>(const Slot&) const = default;
};

// Every (day, start) an extended section may use. InvalidArgument for a
// section that is not extended.
absl::StatusOr<std::vector<Slot>> LegalStarts(const Instance& instance,
                                              int section);

struct Meeting {
  int day = 0;
  int period = 0;
  // Room index, or -1 before room assignment.
  int room = -1;
  auto operator<=>(const Meeting&) const = default;
};

// Meetings per section, each list sorted by (day, period). An empty list
// means the section is not placed.
struct Timetable {
  std::vector<std::vector<Meeting>> sections;

  Timetable() = default;
  explicit Timetable(int num_sections) : sections(num_sections) {}
  bool placed(int s) const { return !sections[s].empty(); }
  bool has_rooms() const;
  bool operator==(const Timetable&) const = default;
};

// Hard-rule violations. With `allow_unplaced` sections without meetings are
// accepted; otherwise each one is an "unplaced" violation. Room double
// bookings are not structural: they are scored as overflow.
std::vector<Violation> CheckStructure(const Instance& instance,
                                      const Timetable& timetable,
                                      bool allow_unplaced = false);

struct ClashWitness {
  int s1 = 0;  // s1 < s2
  int s2 = 0;
  int day = 0;
  int period = 0;
  bool common = false;
  auto operator<=>(const ClashWitness&) const = default;
};

struct RoomOverflow {
  int day = 0;
  int period = 0;
  int room_type = 0;
  int demand = 0;
  int supply = 0;
  auto operator<=>(const RoomOverflow&) const = default;
};

struct DoubleMeeting {
  int section = 0;
  int day = 0;
  int meetings = 0;
  auto operator<=>(const DoubleMeeting&) const = default;
};

// Integer penalty counts; WeightedTotal() weighs them.
struct PenaltyCounts {
  int64_t clashes = 0;
  int64_t common_clashes = 0;
  int64_t room_overflows = 0;
  int64_t double_meetings = 0;
  int64_t days_off = 0;
  bool operator==(const PenaltyCounts&) const = default;
};

// The weighted objective of a set of counts. Solvers and Score share it, so
// equal counts give bit-identical totals.
double WeightedTotal(const PenaltyCounts& counts, const SoftWeights& weights);

struct ConflictReport {
  PenaltyCounts counts;
  double clash_total = 0.0;
  double room_total = 0.0;
  double double_meeting_total = 0.0;
  double day_off_total = 0.0;
  double total = 0.0;
  std::vector<ClashWitness> clashes;
  std::vector<RoomOverflow> room_overflows;
  std::vector<DoubleMeeting> double_meetings;
  // Professors charged the day-off penalty, ascending.
  std::vector<int> day_off_professors;

  int64_t clash_count() const {
    return counts.clashes + counts.common_clashes;
  }
};

// Scores a structurally valid timetable against a conflict graph. Unplaced
// sections contribute nothing. InvalidArgument naming the rule when the
// structure is broken.
absl::StatusOr<ConflictReport> Score(const Instance& instance,
                                     const ConflictGraph& graph,
                                     const Timetable& timetable,
                                     const SoftWeights& weights);

// For every clash witness, each student enrolled in both sections yields the
// pairs (student, s1) and (student, s2).
TabuList ExtractTabu(const Instance& instance, const Sectioning& sectioning,
                     const ConflictReport& report);

// Timetable document: "section day period room" lines ('-' for no room),
// sorted by section id, then day and period.
std::string SerializeTimetable(const Instance& instance,
                               const Timetable& timetable);
absl::StatusOr<Timetable> ParseTimetable(const Instance& instance,
                                         absl::string_view text);

// Report document (JSON): per-category counts and penalties, the total and
// every witness.
std::string SerializeReport(const Instance& instance,
                            const ConflictReport& report);

}  // namespace sectime

#endif  // SECTIME_TIMETABLE_H_
