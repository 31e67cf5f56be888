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

#include "sectime/sectioning_model.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace sectime {

int SectioningModel::XIndex(int student, int section) const {
  const auto key = std::make_pair(student, section);
  const auto it = std::lower_bound(x_vars.begin(), x_vars.end(), key);
  if (it == x_vars.end() || *it != key) return 0;
  return static_cast<int>(it - x_vars.begin()) + 1;
}

int SectioningModel::YIndex(int s, int t) const {
  const std::pair<int, int> key = std::minmax(s, t);
  const auto it = std::lower_bound(y_vars.begin(), y_vars.end(), key);
  if (it == y_vars.end() || *it != key) return 0;
  return static_cast<int>(x_vars.size() + (it - y_vars.begin())) + 1;
}

absl::StatusOr<SectioningModel> BuildModel(const Instance& instance,
                                           const ObjectiveSpec& objective) {
  if (absl::Status s = ValidateObjective(instance, objective); !s.ok()) {
    return s;
  }
  SectioningModel m;
  const int n = instance.num_sections();
  const auto& students = instance.students();

  for (int g = 0; g < instance.num_students(); ++g) {
    for (const int c : students[g].courses) {
      for (const int s : instance.sections_of_course(c)) {
        m.x_vars.emplace_back(g, s);
      }
    }
  }
  std::sort(m.x_vars.begin(), m.x_vars.end());
  m.sizes.w = static_cast<int64_t>(m.x_vars.size());

  // Base pairs.
  std::vector<std::pair<int, int>> forced_pairs;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const bool same_prof = instance.professor_of(s) == instance.professor_of(t);
      const bool single_room =
          instance.room_type_of(s) == instance.room_type_of(t) &&
          instance.room_type_size(instance.room_type_of(s)) == 1;
      if (same_prof) ++m.sizes.pss;
      if (single_room) ++m.sizes.rss;
      if (same_prof || single_room) forced_pairs.emplace_back(s, t);
    }
  }

  // Student triples.
  std::vector<std::tuple<int, int, int>> gss;
  for (int g = 0; g < instance.num_students(); ++g) {
    std::vector<int> enrollable;
    for (const int c : students[g].courses) {
      const auto& secs = instance.sections_of_course(c);
      enrollable.insert(enrollable.end(), secs.begin(), secs.end());
    }
    std::sort(enrollable.begin(), enrollable.end());
    for (size_t i = 0; i < enrollable.size(); ++i) {
      for (size_t j = i + 1; j < enrollable.size(); ++j) {
        const int s = enrollable[i];
        const int t = enrollable[j];
        if (instance.course_of(s) != instance.course_of(t)) {
          gss.emplace_back(g, s, t);
        }
      }
    }
  }
  m.sizes.gss = static_cast<int64_t>(gss.size());

  std::vector<std::pair<int, int>> relevant = forced_pairs;
  for (const auto& [g, s, t] : gss) relevant.emplace_back(s, t);
  std::sort(relevant.begin(), relevant.end());
  relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());
  m.y_vars = std::move(relevant);
  for (const auto& [s, t] : m.y_vars) {
    m.y_weights.push_back(objective.variant == ObjectiveVariant::kEdges
                              ? 1.0
                              : PairWeight(instance, objective.weights, s, t));
  }

  for (const auto& [s, t] : forced_pairs) m.forced.push_back(m.YIndex(s, t));

  for (int g = 0; g < instance.num_students(); ++g) {
    for (const int c : students[g].courses) {
      std::vector<int> row;
      for (const int s : instance.sections_of_course(c)) {
        row.push_back(m.XIndex(g, s));
      }
      m.choose_one.push_back(std::move(row));
    }
  }
  m.sizes.gc = static_cast<int64_t>(m.choose_one.size());

  std::vector<std::vector<int>> members(n);
  for (size_t k = 0; k < m.x_vars.size(); ++k) {
    members[m.x_vars[k].second].push_back(static_cast<int>(k) + 1);
  }
  for (int s = 0; s < n; ++s) {
    if (!members[s].empty()) {
      m.capacity.push_back({s, std::move(members[s]), instance.capacity(s)});
    }
  }

  for (int s = 0; s < n; ++s) {
    if (instance.parent_of(s) >= 0) ++m.sizes.fss;
  }
  for (size_t k = 0; k < m.x_vars.size(); ++k) {
    const auto [g, s] = m.x_vars[k];
    const int p = instance.parent_of(s);
    if (p < 0) continue;
    const int xp = m.XIndex(g, p);
    if (xp == 0) {
      return absl::FailedPreconditionError(absl::StrCat(
          "invariant violation: group_missing_parent_course: student '",
          students[g].id, "' may take '", instance.sections()[s].id,
          "' but not its parent"));
    }
    m.family.emplace_back(static_cast<int>(k) + 1, xp);
  }
  m.sizes.fgss = static_cast<int64_t>(m.family.size());

  for (const auto& [g, s, t] : gss) {
    m.conflict.push_back({m.XIndex(g, s), m.XIndex(g, t), m.YIndex(s, t)});
  }

  if (objective.variant == ObjectiveVariant::kWeightedTabu) {
    m.tabu_weight = objective.weights.d;
    for (const auto& [g, s] : objective.tabu.pairs()) {
      m.tabu.push_back(m.XIndex(g, s));
    }
  }
  m.sizes.ss = static_cast<int64_t>(n) * (n - 1) / 2;
  m.sizes.ps = n;
  return m;
}

absl::StatusOr<Assignment> AssignmentFromSectioning(
    const SectioningModel& model, const Instance& instance,
    const Sectioning& sectioning) {
  absl::StatusOr<ConflictGraph> graph = ScgOf(instance, sectioning);
  if (!graph.ok()) return graph.status();
  Assignment a(model.num_vars() + 1, 0);
  for (int g = 0; g < sectioning.num_students(); ++g) {
    for (const int s : sectioning.row(g)) a[model.XIndex(g, s)] = 1;
  }
  const int nx = static_cast<int>(model.x_vars.size());
  for (size_t k = 0; k < model.y_vars.size(); ++k) {
    const auto [s, t] = model.y_vars[k];
    a[nx + k + 1] = graph->HasEdge(s, t) ? 1 : 0;
  }
  return a;
}

namespace {

std::string XName(const SectioningModel& m, const Instance& inst, int v) {
  const auto [g, s] = m.x_vars[v - 1];
  return absl::StrCat("x:", inst.students()[g].id, ":",
                      inst.sections()[s].id);
}

std::string YName(const SectioningModel& m, const Instance& inst, int v) {
  const auto [s, t] = m.y_vars[v - 1 - m.x_vars.size()];
  return absl::StrCat("y:", inst.sections()[s].id, ":",
                      inst.sections()[t].id);
}

std::string VarName(const SectioningModel& m, const Instance& inst, int v) {
  return v <= static_cast<int>(m.x_vars.size()) ? XName(m, inst, v)
                                                 : YName(m, inst, v);
}

}  // namespace

std::vector<Violation> CheckAssignment(const SectioningModel& model,
                                       const Instance& instance,
                                       const Assignment& a) {
  std::vector<Violation> out;
  if (static_cast<int>(a.size()) != model.num_vars() + 1) {
    out.push_back({"shape", {}, "assignment length mismatch"});
    return out;
  }
  for (const int y : model.forced) {
    if (!a[y]) out.push_back({"forced", {YName(model, instance, y)}, "y = 0"});
  }
  for (const auto& row : model.choose_one) {
    int count = 0;
    for (const int x : row) count += a[x];
    if (count != 1) {
      const auto [g, s] = model.x_vars[row.front() - 1];
      out.push_back(
          {"choose_one",
           {instance.students()[g].id,
            instance.courses()[instance.course_of(s)].id},
           absl::StrCat(count, " sections chosen")});
    }
  }
  for (const auto& row : model.capacity) {
    int count = 0;
    for (const int x : row.vars) count += a[x];
    if (count > row.capacity) {
      out.push_back({"capacity",
                     {instance.sections()[row.section].id},
                     absl::StrCat(count, " > ", row.capacity)});
    }
  }
  for (const auto& [child, parent] : model.family) {
    if (a[child] && !a[parent]) {
      out.push_back({"family",
                     {XName(model, instance, child),
                      XName(model, instance, parent)},
                     "child without parent"});
    }
  }
  for (const auto& row : model.conflict) {
    if (a[row.x1] && a[row.x2] && !a[row.y]) {
      out.push_back({"conflict",
                     {XName(model, instance, row.x1),
                      XName(model, instance, row.x2)},
                     "shared student but y = 0"});
    }
  }
  return out;
}

double ModelObjective(const SectioningModel& model, const Assignment& a) {
  double z = 0.0;
  const size_t nx = model.x_vars.size();
  for (size_t k = 0; k < model.y_vars.size(); ++k) {
    if (a[nx + k + 1]) z += model.y_weights[k];
  }
  for (const int x : model.tabu) {
    if (a[x]) z += model.tabu_weight;
  }
  return z;
}

Sectioning SectioningFromAssignment(const SectioningModel& model,
                                    const Instance& instance,
                                    const Assignment& a) {
  Sectioning f(instance);
  for (size_t k = 0; k < model.x_vars.size(); ++k) {
    if (!a[k + 1]) continue;
    const auto [g, s] = model.x_vars[k];
    f.Assign(instance, g, instance.course_of(s), s);
  }
  return f;
}

absl::StatusOr<ModelFormat> ParseModelFormat(absl::string_view name) {
  if (name == "opb" || name == "pseudo_boolean" || name == "pb") {
    return ModelFormat::kPseudoBoolean;
  }
  if (name == "wcnf" || name == "weighted_clauses") {
    return ModelFormat::kWeightedClauses;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown model format '", name, "'"));
}

namespace {

absl::StatusOr<int64_t> IntegralWeight(double w) {
  if (w < 0 || w != std::floor(w) || w > 9.0e15) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unsupported objective/format combination: coefficient ", w,
        " is not a nonnegative integer"));
  }
  return static_cast<int64_t>(w);
}

// Objective terms (variable, integral weight) with positive weight.
absl::StatusOr<std::vector<std::pair<int, int64_t>>> ObjectiveTerms(
    const SectioningModel& model) {
  std::vector<std::pair<int, int64_t>> terms;
  for (const int x : model.tabu) {
    absl::StatusOr<int64_t> w = IntegralWeight(model.tabu_weight);
    if (!w.ok()) return w.status();
    if (*w > 0) terms.emplace_back(x, *w);
  }
  const int nx = static_cast<int>(model.x_vars.size());
  for (size_t k = 0; k < model.y_vars.size(); ++k) {
    absl::StatusOr<int64_t> w = IntegralWeight(model.y_weights[k]);
    if (!w.ok()) return w.status();
    if (*w > 0) terms.emplace_back(nx + static_cast<int>(k) + 1, *w);
  }
  return terms;
}

std::string SizesComment(const SectioningModel& m, absl::string_view prefix) {
  const ModelSizes& z = m.sizes;
  return absl::StrCat(prefix, " sizes W=", z.w, " GC=", z.gc, " SS=", z.ss,
                      " GSS=", z.gss, " PS=", z.ps, " PSS=", z.pss,
                      " FSS=", z.fss, " FGSS=", z.fgss, " RSS=", z.rss, "\n");
}

std::string ExportOpb(const SectioningModel& m,
                      const std::vector<std::pair<int, int64_t>>& terms) {
  std::string out = absl::StrCat("* #variable= ", m.num_vars(),
                                 " #constraint= ", m.num_rows(), "\n");
  out += SizesComment(m, "*");
  out += "min:";
  for (const auto& [v, w] : terms) absl::StrAppend(&out, " +", w, " x", v);
  out += " ;\n";
  for (const int y : m.forced) absl::StrAppend(&out, "+1 x", y, " >= 1 ;\n");
  for (const auto& row : m.choose_one) {
    for (const int x : row) absl::StrAppend(&out, "+1 x", x, " ");
    out += "= 1 ;\n";
  }
  for (const auto& row : m.capacity) {
    for (const int x : row.vars) absl::StrAppend(&out, "-1 x", x, " ");
    absl::StrAppend(&out, ">= -", row.capacity, " ;\n");
  }
  for (const auto& [child, parent] : m.family) {
    absl::StrAppend(&out, "+1 x", parent, " -1 x", child, " >= 0 ;\n");
  }
  for (const auto& row : m.conflict) {
    absl::StrAppend(&out, "+1 ~x", row.x1, " +1 ~x", row.x2, " +1 x", row.y,
                    " >= 1 ;\n");
  }
  return out;
}

// Hard clauses plus auxiliary variables for the sequential counters.
class ClauseSink {
 public:
  explicit ClauseSink(int first_aux) : next_aux_(first_aux) {}

  void Add(std::vector<int> clause) { hard_.push_back(std::move(clause)); }
  int NewVar() { return next_aux_++; }
  int last_var() const { return next_aux_ - 1; }
  const std::vector<std::vector<int>>& hard() const { return hard_; }

  // sum(vars) <= k.
  void AtMost(const std::vector<int>& x, int k) {
    const int n = static_cast<int>(x.size());
    if (k >= n) return;
    if (k <= 0) {
      for (const int v : x) Add({-v});
      return;
    }
    // s[i][j]: at least j+1 of x[0..i] are true.
    std::vector<std::vector<int>> s(n - 1, std::vector<int>(k));
    for (auto& row : s) {
      for (int& v : row) v = NewVar();
    }
    Add({-x[0], s[0][0]});
    for (int j = 1; j < k; ++j) Add({-s[0][j]});
    for (int i = 1; i < n - 1; ++i) {
      Add({-x[i], s[i][0]});
      Add({-s[i - 1][0], s[i][0]});
      for (int j = 1; j < k; ++j) {
        Add({-x[i], -s[i - 1][j - 1], s[i][j]});
        Add({-s[i - 1][j], s[i][j]});
      }
      Add({-x[i], -s[i - 1][k - 1]});
    }
    Add({-x[n - 1], -s[n - 2][k - 1]});
  }

 private:
  int next_aux_;
  std::vector<std::vector<int>> hard_;
};

std::string ExportWcnf(const SectioningModel& m,
                       const std::vector<std::pair<int, int64_t>>& terms,
                       int* total_vars) {
  ClauseSink sink(m.num_vars() + 1);
  for (const int y : m.forced) sink.Add({y});
  for (const auto& row : m.choose_one) {
    sink.Add(row);
    for (size_t i = 0; i < row.size(); ++i) {
      for (size_t j = i + 1; j < row.size(); ++j) sink.Add({-row[i], -row[j]});
    }
  }
  for (const auto& row : m.capacity) sink.AtMost(row.vars, row.capacity);
  for (const auto& [child, parent] : m.family) sink.Add({-child, parent});
  for (const auto& row : m.conflict) sink.Add({-row.x1, -row.x2, row.y});

  int64_t top = 1;
  for (const auto& [v, w] : terms) top += w;
  const size_t num_clauses = sink.hard().size() + terms.size();
  *total_vars = sink.last_var();
  std::string out = SizesComment(m, "c");
  absl::StrAppend(&out, "p wcnf ", sink.last_var(), " ", num_clauses, " ", top,
                  "\n");
  for (const auto& clause : sink.hard()) {
    absl::StrAppend(&out, top);
    for (const int lit : clause) absl::StrAppend(&out, " ", lit);
    out += " 0\n";
  }
  for (const auto& [v, w] : terms) absl::StrAppend(&out, w, " -", v, " 0\n");
  return out;
}

}  // namespace

absl::StatusOr<ExportedModel> ExportModel(const SectioningModel& model,
                                          const Instance& instance,
                                          ModelFormat format) {
  absl::StatusOr<std::vector<std::pair<int, int64_t>>> terms =
      ObjectiveTerms(model);
  if (!terms.ok()) return terms.status();
  ExportedModel out;
  int total_vars = model.num_vars();
  if (format == ModelFormat::kPseudoBoolean) {
    out.model = ExportOpb(model, *terms);
  } else {
    out.model = ExportWcnf(model, *terms, &total_vars);
  }
  for (int v = 1; v <= model.num_vars(); ++v) {
    absl::StrAppend(&out.variable_map, VarName(model, instance, v), " ", v,
                    "\n");
  }
  for (int v = model.num_vars() + 1; v <= total_vars; ++v) {
    absl::StrAppend(&out.variable_map, "aux:", v - model.num_vars(), " ", v,
                    "\n");
  }
  return out;
}

absl::StatusOr<ImportResult> ImportSolution(const SectioningModel& model,
                                            const Instance& instance,
                                            absl::string_view text) {
  const int nv = model.num_vars();
  const int nx = static_cast<int>(model.x_vars.size());
  std::vector<int8_t> value(nv + 1, -1);
  absl::flat_hash_map<std::string, int> by_name;
  for (int v = 1; v <= nv; ++v) by_name[VarName(model, instance, v)] = v;

  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const char lead = line.front();
    if (lead == '*' || ((lead == 's' || lead == 'o' || lead == 'c') &&
                        (line.size() == 1 || line[1] == ' '))) {
      continue;
    }
    std::vector<absl::string_view> f =
        absl::StrSplit(line, ' ', absl::SkipEmpty());
    if (f[0] == "v") {
      for (size_t i = 1; i < f.size(); ++i) {
        absl::string_view tok = f[i];
        bool positive = true;
        if (!tok.empty() && (tok.front() == '-' || tok.front() == '~')) {
          positive = false;
          tok.remove_prefix(1);
        }
        if (!tok.empty() && tok.front() == 'x') tok.remove_prefix(1);
        int v = 0;
        if (!absl::SimpleAtoi(tok, &v) || v < 0) {
          return absl::InvalidArgumentError(absl::StrCat(
              "syntax error at line ", line_no, ": bad literal '", f[i], "'"));
        }
        if (v == 0 || v > nv) continue;
        value[v] = positive ? 1 : 0;
      }
      continue;
    }
    int bit = 0;
    if (f.size() != 2 || !absl::SimpleAtoi(f[1], &bit) || bit < 0 || bit > 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "syntax error at line ", line_no, ": expected 'name 0|1'"));
    }
    if (absl::StartsWith(f[0], "aux:")) continue;
    const auto it = by_name.find(f[0]);
    if (it == by_name.end()) {
      return absl::NotFoundError(absl::StrCat(
          "unknown variable '", f[0], "' at line ", line_no));
    }
    value[it->second] = static_cast<int8_t>(bit);
  }

  for (int v = 1; v <= nx; ++v) {
    if (value[v] < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "assignment does not cover ", VarName(model, instance, v)));
    }
  }
  ImportResult result;
  result.assignment.assign(nv + 1, 0);
  for (int v = 1; v <= nv; ++v) {
    result.assignment[v] = value[v] > 0 ? 1 : 0;
  }
  // Least consistent y for omitted entries.
  for (const int y : model.forced) {
    if (value[y] < 0) result.assignment[y] = 1;
  }
  for (const auto& row : model.conflict) {
    if (value[row.y] < 0 && result.assignment[row.x1] &&
        result.assignment[row.x2]) {
      result.assignment[row.y] = 1;
    }
  }
  result.violations = CheckAssignment(model, instance, result.assignment);
  result.objective = ModelObjective(model, result.assignment);
  if (result.violations.empty()) {
    Sectioning f = SectioningFromAssignment(model, instance, result.assignment);
    const std::vector<Violation> check = ValidateSectioning(instance, f);
    if (!check.empty()) {
      return absl::InternalError(absl::StrCat(
          "model accepted an invalid sectioning: ", FormatViolations(check)));
    }
    result.sectioning = std::move(f);
  }
  return result;
}

}  // namespace sectime
