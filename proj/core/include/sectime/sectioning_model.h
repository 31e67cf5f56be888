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

// The boolean sectioning model and its exchange formats.
//
// Variables: x[g,s] for every enrollable (student, section) pair and y[s,t]
// for section pairs that can become conflict-graph edges. Constraint
// families:
//   forced      y[s,t] = 1 for same-professor and single-room pairs
//   choose_one  exactly one x[g,s] per required (student, course)
//   capacity    sum_g x[g,s] <= capacity(s)
//   family      x[g,child] <= x[g,parent]
//   conflict    not x[g,s] or not x[g,t] or y[s,t]
// Objective: sum of w[s,t] y[s,t] plus d per tabu x.
//
// Variables are numbered 1..|x| for x (sorted by student, section) and then
// |x|+1..|x|+|y| for y (sorted pairs). The weighted-clause export adds
// auxiliary counter variables after those.

#ifndef SECTIME_SECTIONING_MODEL_H_
#define SECTIME_SECTIONING_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sectime/conflict_graph.h"
#include "sectime/edge_minimizer.h"
#include "sectime/instance.h"

namespace sectime {

// Cardinalities of the index sets of the model.
struct ModelSizes {
  int64_t w = 0;     // enrollable (student, section) pairs
  int64_t gc = 0;    // required (student, course) pairs
  int64_t ss = 0;    // unordered section pairs
  int64_t gss = 0;   // (student, s, t) with both enrollable, distinct courses
  int64_t ps = 0;    // (professor, section) pairs
  int64_t pss = 0;   // same-professor section pairs
  int64_t fss = 0;   // (parent, child) pairs
  int64_t fgss = 0;  // (student, parent, child) with both enrollable
  int64_t rss = 0;   // pairs sharing a single-room room-type
  bool operator==(const ModelSizes&) const = default;
};

struct SectioningModel {
  ModelSizes sizes;
  // x variable k+1 is x_vars[k] = (student, section).
  std::vector<std::pair<int, int>> x_vars;
  // y variable |x|+k+1 is y_vars[k] = (s, t) with s < t.
  std::vector<std::pair<int, int>> y_vars;
  std::vector<double> y_weights;
  // Variable indices (1-based) of each constraint family.
  std::vector<int> forced;
  std::vector<std::vector<int>> choose_one;
  struct CapacityRow {
    int section;
    std::vector<int> vars;
    int capacity;
  };
  std::vector<CapacityRow> capacity;
  // (child x, parent x).
  std::vector<std::pair<int, int>> family;
  // (x1, x2, y).
  struct ConflictRow {
    int x1;
    int x2;
    int y;
  };
  std::vector<ConflictRow> conflict;
  // x indices carrying the tabu coefficient.
  std::vector<int> tabu;
  double tabu_weight = 0.0;

  int num_vars() const {
    return static_cast<int>(x_vars.size() + y_vars.size());
  }
  int num_rows() const {
    return static_cast<int>(forced.size() + choose_one.size() +
                            capacity.size() + family.size() + conflict.size());
  }
  // 1-based index of x[g,s] / y[s,t], or 0.
  int XIndex(int student, int section) const;
  int YIndex(int s, int t) const;
};

absl::StatusOr<SectioningModel> BuildModel(const Instance& instance,
                                           const ObjectiveSpec& objective);

// Values indexed by variable (entry 0 unused).
using Assignment = std::vector<uint8_t>;

// x from the sectioning, y as the edge indicator of its conflict graph.
absl::StatusOr<Assignment> AssignmentFromSectioning(
    const SectioningModel& model, const Instance& instance,
    const Sectioning& sectioning);

// One violation per unsatisfied row; rule names are the family names.
std::vector<Violation> CheckAssignment(const SectioningModel& model,
                                       const Instance& instance,
                                       const Assignment& assignment);

double ModelObjective(const SectioningModel& model,
                      const Assignment& assignment);

// Sectioning encoded by the x part (rows may be incomplete when the
// assignment breaks choose_one).
Sectioning SectioningFromAssignment(const SectioningModel& model,
                                    const Instance& instance,
                                    const Assignment& assignment);

enum class ModelFormat { kPseudoBoolean, kWeightedClauses };

absl::StatusOr<ModelFormat> ParseModelFormat(absl::string_view name);

struct ExportedModel {
  std::string model;
  // "name index" per variable.
  std::string variable_map;
};

// Linear pseudo-boolean text (">=" and "=" rows, "min:" objective) or
// weighted CNF ("p wcnf V C top"). Both formats need integral objective
// coefficients; anything else is InvalidArgument.
absl::StatusOr<ExportedModel> ExportModel(const SectioningModel& model,
                                          const Instance& instance,
                                          ModelFormat format);

struct ImportResult {
  // Present iff the assignment satisfies every row.
  std::optional<Sectioning> sectioning;
  std::vector<Violation> violations;
  Assignment assignment;
  double objective = 0.0;
};

// Reads solver output: "v" lines of literals ("x5", "-x5", "~x5", "5",
// "-5") and/or "name value" lines using the variable-map names. Literals
// above the model's variables are auxiliary and ignored; "s", "o", "c" and
// "*" lines are ignored. Omitted y variables take their least consistent
// value. Errors: NotFound for an unknown name, InvalidArgument for a syntax
// error or an x variable left unassigned.
absl::StatusOr<ImportResult> ImportSolution(const SectioningModel& model,
                                            const Instance& instance,
                                            absl::string_view text);

}  // namespace sectime

#endif  // SECTIME_SECTIONING_MODEL_H_
