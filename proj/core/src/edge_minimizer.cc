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

#include "sectime/edge_minimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "sectime/random.h"
#include "sectime/work_clock.h"

namespace sectime {

absl::string_view ObjectiveVariantName(ObjectiveVariant variant) {
  switch (variant) {
    case ObjectiveVariant::kEdges:
      return "edges";
    case ObjectiveVariant::kWeighted:
      return "weighted";
    case ObjectiveVariant::kWeightedTabu:
      return "weighted_tabu";
  }
  return "unknown";
}

absl::StatusOr<ObjectiveVariant> ParseObjectiveVariant(absl::string_view name) {
  if (name == "edges") return ObjectiveVariant::kEdges;
  if (name == "weighted") return ObjectiveVariant::kWeighted;
  if (name == "weighted_tabu" || name == "weighted-tabu") {
    return ObjectiveVariant::kWeightedTabu;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown objective variant '", name, "'"));
}

TabuList::TabuList(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool TabuList::Contains(int student, int section) const {
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            std::make_pair(student, section));
}

void TabuList::Merge(const TabuList& other) {
  std::vector<std::pair<int, int>> merged = pairs_;
  merged.insert(merged.end(), other.pairs_.begin(), other.pairs_.end());
  *this = TabuList(std::move(merged));
}

std::string SerializeTabu(const Instance& instance, const TabuList& tabu) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [g, s] : tabu.pairs()) {
    rows.emplace_back(instance.students()[g].id, instance.sections()[s].id);
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [g, s] : rows) absl::StrAppend(&out, g, " ", s, "\n");
  return out;
}

absl::StatusOr<TabuList> ParseTabu(const Instance& instance,
                                   absl::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> f =
        absl::StrSplit(line, ' ', absl::SkipEmpty());
    if (f.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "syntax error at line ", line_no, ": expected 'student section'"));
    }
    const int g = instance.StudentIndex(f[0]);
    const int s = instance.SectionIndex(f[1]);
    if (g < 0 || s < 0) {
      return absl::NotFoundError(absl::StrCat(
          "reference error at line ", line_no, ": unknown id in '", line, "'"));
    }
    pairs.emplace_back(g, s);
  }
  return TabuList(std::move(pairs));
}

absl::Status ValidateObjective(const Instance& instance,
                               const ObjectiveSpec& objective) {
  const EdgeWeights& w = objective.weights;
  if (!(w.a >= 0 && w.b >= 0 && w.c >= 0 && w.d >= 0)) {
    return absl::InvalidArgumentError("edge weights must be nonnegative");
  }
  if (!objective.tabu.empty() &&
      objective.variant != ObjectiveVariant::kWeightedTabu) {
    return absl::InvalidArgumentError(
        "a tabu list requires the weighted_tabu objective");
  }
  for (const auto& [g, s] : objective.tabu.pairs()) {
    if (g < 0 || g >= instance.num_students() || s < 0 ||
        s >= instance.num_sections()) {
      return absl::InvalidArgumentError("tabu pair out of range");
    }
    const auto& courses = instance.students()[g].courses;
    if (!std::binary_search(courses.begin(), courses.end(),
                            instance.course_of(s))) {
      return absl::InvalidArgumentError(absl::StrCat(
          "tabu pair (", instance.students()[g].id, ", ",
          instance.sections()[s].id, ") is not an enrollable pair"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> ObjectiveValue(const Instance& instance,
                                      const Sectioning& sectioning,
                                      const ObjectiveSpec& objective) {
  if (absl::Status s = ValidateObjective(instance, objective); !s.ok()) {
    return s;
  }
  absl::StatusOr<ConflictGraph> graph = ScgOf(instance, sectioning);
  if (!graph.ok()) return graph.status();
  if (objective.variant == ObjectiveVariant::kEdges) {
    return static_cast<double>(EdgeCount(*graph));
  }
  double value = WeightedEdgeCount(*graph, instance, objective.weights);
  if (objective.variant == ObjectiveVariant::kWeightedTabu) {
    for (const auto& [g, s] : objective.tabu.pairs()) {
      if (sectioning.SectionFor(instance, g, instance.course_of(s)) == s) {
        value += objective.weights.d;
      }
    }
  }
  return value;
}

double ChoiceSpaceSize(const Instance& instance) {
  double product = 1.0;
  for (const Student& g : instance.students()) {
    for (const int c : g.courses) {
      product *= static_cast<double>(instance.sections_of_course(c).size());
    }
  }
  return product;
}

namespace {

constexpr double kEps = 1e-9;
constexpr size_t kMaxUnitOptions = 512;

// Weight of the pair (s, t) under the objective, ignoring base edges.
std::vector<double> PairWeights(const Instance& instance,
                                const ObjectiveSpec& objective) {
  const int n = instance.num_sections();
  std::vector<double> w(static_cast<size_t>(n) * n, 0.0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      w[static_cast<size_t>(s) * n + t] =
          objective.variant == ObjectiveVariant::kEdges
              ? 1.0
              : PairWeight(instance, objective.weights, s, t);
    }
  }
  return w;
}

// Shared best-solution exchange point for portfolio workers.
struct Exchange {
  std::mutex mu;
  double value = std::numeric_limits<double>::infinity();
  Sectioning best;
  int version = 0;
};

// Incremental state for one search worker: co-enrollment counts per section
// pair, loads, and the objective of the current sectioning.
class SectioningSearch {
 public:
  SectioningSearch(const Instance& instance, const ObjectiveSpec& objective,
                   const std::vector<double>& weights,
                   const std::vector<uint8_t>& base, double base_value,
                   uint64_t seed)
      : inst_(instance),
        n_(instance.num_sections()),
        weights_(weights),
        base_(base),
        base_value_(base_value),
        tabu_weight_(objective.variant == ObjectiveVariant::kWeightedTabu
                         ? objective.weights.d
                         : 0.0),
        rng_(seed),
        clock_(kSectioningUnitsPerSecond) {
    tabu_.assign(static_cast<size_t>(instance.num_students()) * n_, 0);
    if (tabu_weight_ > 0) {
      for (const auto& [g, s] : objective.tabu.pairs()) {
        tabu_[static_cast<size_t>(g) * n_ + s] = 1;
      }
    }
    for (int c = 0; c < instance.num_courses(); ++c) course_students_.emplace_back();
    const auto& students = instance.students();
    for (int g = 0; g < instance.num_students(); ++g) {
      for (size_t k = 0; k < students[g].courses.size(); ++k) {
        course_students_[students[g].courses[k]].emplace_back(g, static_cast<int>(k));
        gc_.emplace_back(g, static_cast<int>(k));
      }
    }
  }

  void Load(const Sectioning& sectioning) {
    current_ = sectioning;
    cnt_.assign(static_cast<size_t>(n_) * n_, 0);
    load_.assign(n_, 0);
    value_ = base_value_;
    for (int g = 0; g < current_.num_students(); ++g) {
      const std::vector<int>& row = current_.row(g);
      for (size_t i = 0; i < row.size(); ++i) {
        ++load_[row[i]];
        if (Tabu(g, row[i])) value_ += tabu_weight_;
        for (size_t j = 0; j < i; ++j) value_ += Inc(row[i], row[j]);
      }
    }
    clock_.Charge(static_cast<int64_t>(gc_.size()) * 8);
  }

  double value() const { return value_; }
  const Sectioning& current() const { return current_; }
  const WorkClock& clock() const { return clock_; }

  // Runs until the budget is spent; returns the best sectioning seen.
  void Run(const ImproveOptions& options, Exchange* exchange,
           ImproveResult* result) {
    Sectioning best = current_;
    double best_value = value_;
    result->log.push_back({0, clock_.seconds(), best_value});
    int64_t iteration = 0;
    int64_t stall = 0;
    int exchange_version = -1;
    const int64_t stall_limit =
        std::max<int64_t>(20000, static_cast<int64_t>(gc_.size()) * 4);
    bool movable = false;
    for (const auto& [g, k] : gc_) {
      const int course = inst_.students()[g].courses[k];
      movable |= inst_.sections_of_course(course).size() > 1;
    }
    while (movable && !clock_.Exceeds(options.budget_seconds) &&
           (options.max_iterations < 0 || iteration < options.max_iterations)) {
      ++iteration;
      ++stall;
      // Rejected moves still cost something.
      clock_.Charge(16);
      double delta;
      if (rng_.Chance(0.25)) {
        delta = TrySwap();
      } else {
        delta = TryReenroll();
      }
      (void)delta;
      if (value_ < best_value - kEps) {
        best_value = value_;
        best = current_;
        stall = 0;
        result->log.push_back({iteration, clock_.seconds(), best_value});
        if (exchange != nullptr) Publish(exchange, best, best_value);
      }
      if (stall > stall_limit) {
        // Restart from the best known solution with a random kick.
        if (exchange != nullptr) {
          std::lock_guard<std::mutex> lock(exchange->mu);
          if (exchange->version != exchange_version &&
              exchange->value < best_value - kEps) {
            best = exchange->best;
            best_value = exchange->value;
          }
          exchange_version = exchange->version;
        }
        Load(best);
        Kick(std::max<int>(3, static_cast<int>(gc_.size() / 200)));
        stall = 0;
      }
    }
    result->sectioning = std::move(best);
    result->value = best_value;
    result->iterations = iteration;
    result->seconds = clock_.seconds();
  }

 private:
  size_t Key(int s, int t) const { return static_cast<size_t>(s) * n_ + t; }
  bool Tabu(int g, int s) const {
    return tabu_[static_cast<size_t>(g) * n_ + s] != 0;
  }

  // Pair count updates; return the objective change.
  double Inc(int s, int t) {
    int32_t& c = cnt_[Key(s, t)];
    cnt_[Key(t, s)] = c + 1;
    return c++ == 0 && base_[Key(s, t)] == 0 ? weights_[Key(s, t)] : 0.0;
  }
  double Dec(int s, int t) {
    int32_t& c = cnt_[Key(s, t)];
    cnt_[Key(t, s)] = c - 1;
    return --c == 0 && base_[Key(s, t)] == 0 ? -weights_[Key(s, t)] : 0.0;
  }

  // Replaces the sections of student g at the given row positions and
  // returns the objective change. Positions must be distinct.
  double Apply(int g, const std::vector<std::pair<int, int>>& changes) {
    double delta = 0.0;
    const std::vector<int>& row = current_.row(g);
    int64_t work = 4;
    for (const auto& [k, s] : changes) {
      const int old = row[k];
      if (old == s) continue;
      for (size_t j = 0; j < row.size(); ++j) {
        if (static_cast<int>(j) != k) delta += Dec(old, row[j]);
      }
      work += static_cast<int64_t>(row.size());
      --load_[old];
      if (Tabu(g, old)) delta -= tabu_weight_;
      current_.set(g, k, s);
      for (size_t j = 0; j < row.size(); ++j) {
        if (static_cast<int>(j) != k) delta += Inc(s, row[j]);
      }
      work += static_cast<int64_t>(row.size());
      ++load_[s];
      if (Tabu(g, s)) delta += tabu_weight_;
    }
    clock_.Charge(work);
    value_ += delta;
    return delta;
  }

  // Row positions of g linked to position k through a family: the root
  // section's position and the positions of all held children of the root.
  std::vector<int> UnitPositions(int g, int k) const {
    const std::vector<int>& row = current_.row(g);
    const int s = row[k];
    const int root = inst_.parent_of(s) >= 0 ? inst_.parent_of(s) : s;
    std::vector<int> positions;
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] == root || inst_.parent_of(row[j]) == root) {
        positions.push_back(static_cast<int>(j));
      }
    }
    return positions;
  }

  // Every held child has its parent held.
  bool FamilyValid(int g, const std::vector<int>& row) const {
    const auto& courses = inst_.students()[g].courses;
    for (const int s : row) {
      const int p = inst_.parent_of(s);
      if (p < 0) continue;
      const auto it =
          std::lower_bound(courses.begin(), courses.end(), inst_.course_of(p));
      if (it == courses.end() || row[it - courses.begin()] != p) return false;
    }
    return true;
  }

  // Best re-enrollment of one (student, course) unit: all sections of the
  // unit's courses are tried and the cheapest admissible combination wins.
  double TryReenroll() {
    const auto [g, k] = rng_.Pick(gc_);
    const std::vector<int> positions = UnitPositions(g, k);
    const auto& courses = inst_.students()[g].courses;
    std::vector<int> row = current_.row(g);
    const std::vector<int> original = row;

    // Enumerate combinations with an odometer.
    std::vector<const std::vector<int>*> choices;
    size_t total = 1;
    for (const int pos : positions) {
      choices.push_back(&inst_.sections_of_course(courses[pos]));
      total *= choices.back()->size();
    }
    if (total <= 1) return 0.0;
    std::vector<size_t> digit(positions.size(), 0);
    std::vector<std::vector<std::pair<int, int>>> candidates;
    const bool sample = total > kMaxUnitOptions;
    for (size_t iter = 0; iter < std::min(total, kMaxUnitOptions); ++iter) {
      if (sample) {
        for (size_t i = 0; i < positions.size(); ++i) {
          digit[i] = rng_.Below(choices[i]->size());
        }
      }
      bool changed = false;
      bool feasible = true;
      for (size_t i = 0; i < positions.size(); ++i) {
        const int s = (*choices[i])[digit[i]];
        row[positions[i]] = s;
        if (s != original[positions[i]]) {
          changed = true;
          if (load_[s] >= inst_.capacity(s)) feasible = false;
        }
      }
      if (changed && feasible && FamilyValid(g, row)) {
        std::vector<std::pair<int, int>> change;
        for (const int pos : positions) change.emplace_back(pos, row[pos]);
        candidates.push_back(std::move(change));
      }
      if (!sample) {
        for (size_t i = 0; i < digit.size(); ++i) {
          if (++digit[i] < choices[i]->size()) break;
          digit[i] = 0;
        }
      }
    }
    clock_.Charge(static_cast<int64_t>(candidates.size()) * 4 + 8);
    if (candidates.empty()) return 0.0;

    std::vector<std::pair<int, int>> undo;
    for (const int pos : positions) undo.emplace_back(pos, original[pos]);
    double best = std::numeric_limits<double>::infinity();
    std::vector<size_t> ties;
    for (size_t i = 0; i < candidates.size(); ++i) {
      const double d = Apply(g, candidates[i]);
      Apply(g, undo);
      if (d < best - kEps) {
        best = d;
        ties.clear();
      }
      if (d <= best + kEps) ties.push_back(i);
    }
    if (best < -kEps || (best <= kEps && rng_.Chance(0.3))) {
      return Apply(g, candidates[rng_.Pick(ties)]);
    }
    return 0.0;
  }

  // Two students of the same course exchange their sections of the course
  // (and of the family linked to it).
  double TrySwap() {
    const auto [g1, k1] = rng_.Pick(gc_);
    const int course = inst_.students()[g1].courses[k1];
    const auto& pool = course_students_[course];
    if (pool.size() < 2) return 0.0;
    const auto [g2, k2] = rng_.Pick(pool);
    if (g1 == g2 || current_.at(g1, k1) == current_.at(g2, k2)) return 0.0;
    const std::vector<int> p1 = UnitPositions(g1, k1);
    const std::vector<int> p2 = UnitPositions(g2, k2);
    if (p1.size() != p2.size()) return 0.0;
    const auto& c1 = inst_.students()[g1].courses;
    const auto& c2 = inst_.students()[g2].courses;
    std::vector<std::pair<int, int>> to1, to2, undo1, undo2;
    std::vector<int> row1 = current_.row(g1);
    std::vector<int> row2 = current_.row(g2);
    for (size_t i = 0; i < p1.size(); ++i) {
      if (c1[p1[i]] != c2[p2[i]]) return 0.0;
      to1.emplace_back(p1[i], current_.at(g2, p2[i]));
      to2.emplace_back(p2[i], current_.at(g1, p1[i]));
      undo1.emplace_back(p1[i], current_.at(g1, p1[i]));
      undo2.emplace_back(p2[i], current_.at(g2, p2[i]));
      row1[p1[i]] = current_.at(g2, p2[i]);
      row2[p2[i]] = current_.at(g1, p1[i]);
    }
    if (!FamilyValid(g1, row1) || !FamilyValid(g2, row2)) return 0.0;
    const double d = Apply(g1, to1) + Apply(g2, to2);
    if (d < -kEps || (d <= kEps && rng_.Chance(0.3))) return d;
    Apply(g2, undo2);
    Apply(g1, undo1);
    return 0.0;
  }

  // Random admissible re-enrollments regardless of cost.
  void Kick(int moves) {
    for (int m = 0; m < moves; ++m) {
      const auto [g, k] = rng_.Pick(gc_);
      const std::vector<int> positions = UnitPositions(g, k);
      const auto& courses = inst_.students()[g].courses;
      std::vector<int> row = current_.row(g);
      for (int attempt = 0; attempt < 8; ++attempt) {
        bool feasible = true;
        for (const int pos : positions) {
          const int s = rng_.Pick(inst_.sections_of_course(courses[pos]));
          if (s != current_.at(g, pos) && load_[s] >= inst_.capacity(s)) {
            feasible = false;
          }
          row[pos] = s;
        }
        if (feasible && FamilyValid(g, row)) {
          std::vector<std::pair<int, int>> change;
          for (const int pos : positions) change.emplace_back(pos, row[pos]);
          Apply(g, change);
          break;
        }
        row = current_.row(g);
      }
    }
  }

  void Publish(Exchange* exchange, const Sectioning& best, double value) {
    std::lock_guard<std::mutex> lock(exchange->mu);
    if (value < exchange->value - kEps) {
      exchange->value = value;
      exchange->best = best;
      ++exchange->version;
    }
  }

  const Instance& inst_;
  const int n_;
  const std::vector<double>& weights_;
  const std::vector<uint8_t>& base_;
  const double base_value_;
  const double tabu_weight_;
  Rng rng_;
  WorkClock clock_;
  std::vector<uint8_t> tabu_;
  std::vector<std::vector<std::pair<int, int>>> course_students_;
  std::vector<std::pair<int, int>> gc_;
  Sectioning current_;
  std::vector<int32_t> cnt_;
  std::vector<int> load_;
  double value_ = 0.0;
};

}  // namespace

absl::StatusOr<ImproveResult> Improve(const Instance& instance,
                                      const Sectioning& start,
                                      const ObjectiveSpec& objective,
                                      const ImproveOptions& options) {
  if (options.budget_seconds <= 0) {
    return absl::InvalidArgumentError("budget must be positive");
  }
  absl::StatusOr<double> start_value =
      ObjectiveValue(instance, start, objective);
  if (!start_value.ok()) return start_value.status();

  const int n = instance.num_sections();
  const ConflictGraph base_graph = BaseScg(instance);
  std::vector<uint8_t> base(static_cast<size_t>(n) * n, 0);
  double base_value = 0.0;
  const std::vector<double> weights = PairWeights(instance, objective);
  for (const ConflictGraph::Edge& e : base_graph.Edges()) {
    base[static_cast<size_t>(e.s) * n + e.t] = 1;
    base[static_cast<size_t>(e.t) * n + e.s] = 1;
    base_value += weights[static_cast<size_t>(e.s) * n + e.t];
  }

  const int workers = std::max(1, options.workers);
  std::vector<ImproveResult> results(workers);
  if (workers == 1) {
    SectioningSearch search(instance, objective, weights, base, base_value,
                            options.seed);
    search.Load(start);
    search.Run(options, nullptr, &results[0]);
  } else {
    Exchange exchange;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        SectioningSearch search(instance, objective, weights, base, base_value,
                                options.seed + static_cast<uint64_t>(w));
        search.Load(start);
        search.Run(options, &exchange, &results[w]);
      });
    }
    for (std::thread& t : threads) t.join();
  }

  size_t best = 0;
  for (size_t w = 1; w < results.size(); ++w) {
    if (results[w].value < results[best].value - kEps) best = w;
  }
  ImproveResult result = std::move(results[best]);
  result.start_value = *start_value;
  absl::StatusOr<double> check =
      ObjectiveValue(instance, result.sectioning, objective);
  if (!check.ok()) return check.status();
  if (std::abs(*check - result.value) > 1e-6 * std::max(1.0, *check)) {
    return absl::InternalError(absl::StrCat(
        "incremental objective ", result.value, " disagrees with recount ",
        *check));
  }
  result.value = *check;
  if (result.value > *start_value + kEps) {
    return absl::InternalError("local search returned a worse sectioning");
  }
  return result;
}

namespace {

// Exhaustive enumeration. Deliberately independent of SectioningSearch: it
// keeps its own pair counts and evaluates the objective from scratch terms.
class BruteForce {
 public:
  BruteForce(const Instance& instance, const ObjectiveSpec& objective)
      : inst_(instance),
        objective_(objective),
        n_(instance.num_sections()),
        sectioning_(instance),
        cnt_(static_cast<size_t>(n_) * n_, 0),
        load_(n_, 0) {
    const ConflictGraph base = BaseScg(instance);
    base_.assign(static_cast<size_t>(n_) * n_, 0);
    for (const ConflictGraph::Edge& e : base.Edges()) {
      base_[Key(e.s, e.t)] = base_[Key(e.t, e.s)] = 1;
      base_value_ += Weight(e.s, e.t);
    }
    const auto& students = instance.students();
    for (int g = 0; g < instance.num_students(); ++g) {
      for (size_t k = 0; k < students[g].courses.size(); ++k) {
        entries_.emplace_back(g, static_cast<int>(k));
      }
    }
  }

  absl::StatusOr<BruteForceResult> Solve() {
    best_value_ = std::numeric_limits<double>::infinity();
    Recurse(0, base_value_);
    if (!found_) {
      return absl::NotFoundError("no sectioning satisfies the capacities");
    }
    return BruteForceResult{best_, best_value_, nodes_};
  }

 private:
  size_t Key(int s, int t) const { return static_cast<size_t>(s) * n_ + t; }

  double Weight(int s, int t) const {
    if (objective_.variant == ObjectiveVariant::kEdges) return 1.0;
    return PairWeight(inst_, objective_.weights, s, t);
  }

  bool Compatible(int g, int k, int s) const {
    const std::vector<int>& row = sectioning_.row(g);
    for (int j = 0; j < k; ++j) {
      const int v = row[j];
      const int pv = inst_.parent_of(v);
      if (pv >= 0 && inst_.course_of(pv) == inst_.course_of(s) && pv != s) {
        return false;
      }
      const int ps = inst_.parent_of(s);
      if (ps >= 0 && inst_.course_of(ps) == inst_.course_of(v) && ps != v) {
        return false;
      }
    }
    return true;
  }

  void Recurse(size_t i, double partial) {
    ++nodes_;
    if (partial >= best_value_ - kEps) return;
    if (i == entries_.size()) {
      found_ = true;
      best_value_ = partial;
      best_ = sectioning_;
      return;
    }
    const auto [g, k] = entries_[i];
    const int course = inst_.students()[g].courses[k];
    for (const int s : inst_.sections_of_course(course)) {
      if (load_[s] >= inst_.capacity(s) || !Compatible(g, k, s)) continue;
      double added = 0.0;
      for (int j = 0; j < k; ++j) {
        const int v = sectioning_.at(g, j);
        if (cnt_[Key(s, v)]++ == 0 && !base_[Key(s, v)]) added += Weight(s, v);
        cnt_[Key(v, s)] = cnt_[Key(s, v)];
      }
      if (objective_.variant == ObjectiveVariant::kWeightedTabu &&
          objective_.tabu.Contains(g, s)) {
        added += objective_.weights.d;
      }
      ++load_[s];
      sectioning_.set(g, k, s);
      Recurse(i + 1, partial + added);
      sectioning_.set(g, k, -1);
      --load_[s];
      for (int j = 0; j < k; ++j) {
        const int v = sectioning_.at(g, j);
        --cnt_[Key(s, v)];
        cnt_[Key(v, s)] = cnt_[Key(s, v)];
      }
    }
  }

  const Instance& inst_;
  const ObjectiveSpec& objective_;
  const int n_;
  Sectioning sectioning_;
  std::vector<int> cnt_;
  std::vector<uint8_t> base_;
  std::vector<int> load_;
  std::vector<std::pair<int, int>> entries_;
  double base_value_ = 0.0;
  double best_value_ = 0.0;
  Sectioning best_;
  bool found_ = false;
  int64_t nodes_ = 0;
};

}  // namespace

absl::StatusOr<BruteForceResult> BruteForceOptimum(
    const Instance& instance, const ObjectiveSpec& objective, double limit) {
  if (absl::Status s = ValidateObjective(instance, objective); !s.ok()) {
    return s;
  }
  const double space = ChoiceSpaceSize(instance);
  if (space > limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "choice space ", space, " exceeds enumeration limit ", limit));
  }
  BruteForce search(instance, objective);
  return search.Solve();
}

}  // namespace sectime
