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

#ifndef SECTIME_GREEDY_H_
#define SECTIME_GREEDY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sectime/conflict_graph.h"
#include "sectime/instance.h"

namespace sectime {

// Size of the symmetric difference of two students' course sets.
int StudentDistance(const Student& a, const Student& b);

// Diagnostics of one greedy run, indexed by visit position.
struct GreedyTrace {
  std::vector<int> visit_order;
  // Sections copied from the predecessor and sections chosen afresh.
  std::vector<int> copied;
  std::vector<int> fresh;
  // Total edges of the conflict graph (base edges included) after each
  // student has been enrolled.
  std::vector<int64_t> running_edges;
  // Students whose copy phase had to be abandoned because it left a required
  // course without any admissible section.
  std::vector<int> copy_fallbacks;
};

struct GreedyResult {
  Sectioning sectioning;
  GreedyTrace trace;
};

// Greedy chain sectioning. Students are visited in a chain; each one copies
// the still-open sections of the most similar previously visited student and
// fills the remaining courses with the section (family) adding the fewest new
// conflict-graph edges. Deterministic per (instance, seed). Fails with
// ResourceExhausted naming the course when capacities run out.
absl::StatusOr<GreedyResult> GreedySection(const Instance& instance,
                                           uint64_t seed);

std::string SerializeGreedyTrace(const Instance& instance,
                                 const GreedyTrace& trace);

}  // namespace sectime

#endif  // SECTIME_GREEDY_H_
