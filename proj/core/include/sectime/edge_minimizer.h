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

// Conflict-graph edge minimization over sectionings.
//
// Three objectives are supported: the plain edge count, edges weighted by the
// number of extended endpoints, and the weighted count plus a penalty for
// every enrollment listed in a tabu list. Improve() is a seeded local search
// (re-enroll and swap moves) started from a given sectioning; the exact
// formulation is available through sectioning_model.h for external solvers.

#ifndef SECTIME_EDGE_MINIMIZER_H_
#define SECTIME_EDGE_MINIMIZER_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sectime/conflict_graph.h"
#include "sectime/instance.h"

namespace sectime {

enum class ObjectiveVariant { kEdges, kWeighted, kWeightedTabu };

absl::string_view ObjectiveVariantName(ObjectiveVariant variant);
// Accepts "edges", "weighted", "weighted_tabu" and "weighted-tabu".
absl::StatusOr<ObjectiveVariant> ParseObjectiveVariant(absl::string_view name);

// Sorted, duplicate-free (student, section) pairs to discourage.
class TabuList {
 public:
  TabuList() = default;
  explicit TabuList(std::vector<std::pair<int, int>> pairs);

  bool Contains(int student, int section) const;
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  // Union with another list.
  void Merge(const TabuList& other);

  bool operator==(const TabuList&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// "student section" lines in byte order.
std::string SerializeTabu(const Instance& instance, const TabuList& tabu);
absl::StatusOr<TabuList> ParseTabu(const Instance& instance,
                                   absl::string_view text);

struct ObjectiveSpec {
  ObjectiveVariant variant = ObjectiveVariant::kWeighted;
  EdgeWeights weights;
  TabuList tabu;
};

// Weights nonnegative; tabu pairs must be enrollable (student requires the
// section's course); a tabu list is only meaningful for kWeightedTabu.
absl::Status ValidateObjective(const Instance& instance,
                               const ObjectiveSpec& objective);

// Objective of a valid sectioning, computed from its conflict graph.
absl::StatusOr<double> ObjectiveValue(const Instance& instance,
                                      const Sectioning& sectioning,
                                      const ObjectiveSpec& objective);

struct ImproveOptions {
  // Budget in deterministic seconds (see work_clock.h).
  double budget_seconds = 10.0;
  // Optional cap on iterations; negative means none.
  int64_t max_iterations = -1;
  uint64_t seed = 1;
  // Independent seeded searches sharing their best solution.
  int workers = 1;
};

struct ImproveLogEntry {
  int64_t iteration = 0;
  double seconds = 0.0;
  double value = 0.0;
};

struct ImproveResult {
  Sectioning sectioning;
  double value = 0.0;
  double start_value = 0.0;
  int64_t iterations = 0;
  double seconds = 0.0;
  // Improvements of the best value over time.
  std::vector<ImproveLogEntry> log;
};

// Local search from `start`. The result is valid and never worse than the
// start; with one worker it is a deterministic function of the inputs.
absl::StatusOr<ImproveResult> Improve(const Instance& instance,
                                      const Sectioning& start,
                                      const ObjectiveSpec& objective,
                                      const ImproveOptions& options);

// Product over required (student, course) pairs of the course's section count.
double ChoiceSpaceSize(const Instance& instance);

struct BruteForceResult {
  Sectioning sectioning;
  double value = 0.0;
  int64_t nodes = 0;
};

// Global optimum by exhaustive enumeration with capacity, family and bound
// pruning. Fails with ResourceExhausted when ChoiceSpaceSize exceeds `limit`
// and with NotFound when no sectioning exists.
absl::StatusOr<BruteForceResult> BruteForceOptimum(
    const Instance& instance, const ObjectiveSpec& objective, double limit);

}  // namespace sectime

#endif  // SECTIME_EDGE_MINIMIZER_H_
