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

#include "sectime/timetable_solver.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "sectime/random.h"
#include "sectime/work_clock.h"

namespace sectime {
namespace {

constexpr double kEps = 1e-9;
constexpr double kWalkProbability = 0.02;
constexpr double kPoolProbability = 0.85;
constexpr int kPoolRefresh = 64;
constexpr int64_t kIterationUnits = 400;

using Placement = std::vector<std::vector<int>>;  // slot ids per section

struct Exchange {
  std::mutex mu;
  double value = std::numeric_limits<double>::infinity();
  Placement best;
  int version = 0;
};

class SlotSearch {
 public:
  SlotSearch(const Instance& instance, const ConflictGraph& graph,
             const SoftWeights& weights, const std::vector<int>& movable,
             const std::vector<uint8_t>& is_fixed, uint64_t seed)
      : inst_(instance),
        w_(weights),
        n_(instance.num_sections()),
        days_(instance.grid().days),
        periods_(instance.grid().periods_per_day),
        num_slots_(days_ * periods_),
        num_types_(instance.num_room_types()),
        movable_(movable),
        is_fixed_(is_fixed),
        rng_(seed),
        clock_(kTimetableUnitsPerSecond) {
    adj_.assign(static_cast<size_t>(n_) * n_, 0);
    for (const ConflictGraph::Edge& e : graph.Edges()) {
      adj_[Key(e.s, e.t)] = adj_[Key(e.t, e.s)] = 1;
    }
    for (int d = 0; d < days_; ++d) {
      for (const int t : instance.grid().TeachingPeriods()) {
        teaching_slots_.push_back(d * periods_ + t);
      }
    }
    starts_.resize(n_);
    for (int s = 0; s < n_; ++s) {
      if (!instance.is_extended(s)) continue;
      for (const int t : BlockStarts(instance.grid(), instance.meetings(s))) {
        for (int d = 0; d < days_; ++d) starts_[s].push_back(d * periods_ + t);
      }
      std::sort(starts_[s].begin(), starts_[s].end());
    }
    requested_.assign(instance.professors().size(), -1);
    for (size_t p = 0; p < instance.professors().size(); ++p) {
      const auto& r = instance.professors()[p].requested_day_off;
      if (r.has_value()) requested_[p] = *r;
    }
    tabu_until_.assign(static_cast<size_t>(n_) * num_slots_, 0);
    Reset();
  }

  const WorkClock& clock() const { return clock_; }
  double Objective() const { return WeightedTotal(counts_, w_); }

  // Places the fixed sections, then warm or greedy slots for the movable.
  void Initialize(const Placement& fixed, const Placement& warm) {
    Reset();
    for (int s = 0; s < n_; ++s) {
      if (is_fixed_[s]) {
        for (const int slot : fixed[s]) Place(s, slot);
      }
    }
    std::vector<int> pending;
    for (const int s : movable_) {
      if (!warm.empty() && WarmUsable(s, warm[s])) {
        for (const int slot : warm[s]) Place(s, slot);
      } else {
        pending.push_back(s);
      }
    }
    rng_.Shuffle(pending);
    std::stable_partition(pending.begin(), pending.end(),
                          [this](int s) { return inst_.is_extended(s); });
    for (const int s : pending) GreedyPlace(s);
  }

  void Run(const SolveOptions& options, Exchange* exchange,
           SolveResult* result) {
    best_value_ = Objective();
    best_place_ = place_;
    best_counts_ = counts_;
    int64_t last_improve = 0;
    const int64_t stall_limit =
        std::max<int64_t>(2000, 60 * static_cast<int64_t>(movable_.size()));
    if (exchange != nullptr) Publish(exchange);
    while (best_value_ > kEps && !movable_.empty() &&
           !clock_.Exceeds(options.budget_seconds) &&
           (options.max_iterations < 0 || iter_ < options.max_iterations)) {
      ++iter_;
      // Bookkeeping outside Place/Unplace.
      clock_.Charge(kIterationUnits);
      const int s = Select();
      if (inst_.is_extended(s)) {
        MoveBlock(s);
      } else {
        MoveMeeting(s);
      }
      if (Objective() < best_value_ - kEps) {
        best_value_ = Objective();
        best_place_ = place_;
        best_counts_ = counts_;
        last_improve = iter_;
        if (exchange != nullptr) Publish(exchange);
      }
      if (exchange != nullptr && (iter_ & 255) == 0) {
        std::lock_guard<std::mutex> lock(exchange->mu);
        if (exchange->value <= kEps) break;
      }
      if (iter_ - last_improve > stall_limit) {
        Restart(exchange);
        last_improve = iter_;
      }
    }
    result->timetable = ToTimetable(best_place_);
    result->iterations = iter_;
    result->seconds = clock_.seconds();
  }

  const PenaltyCounts& best_counts() const { return best_counts_; }
  double best_value() const { return best_value_; }

 private:
  size_t Key(int s, int t) const { return static_cast<size_t>(s) * n_ + t; }
  int DayOf(int slot) const { return slot / periods_; }
  int Supply(int rt) const { return inst_.room_type_size(rt); }

  void Reset() {
    occ_.assign(num_slots_, {});
    demand_.assign(static_cast<size_t>(num_slots_) * num_types_, 0);
    section_day_.assign(static_cast<size_t>(n_) * days_, 0);
    prof_day_.assign(inst_.professors().size() * days_, 0);
    prof_days_taught_.assign(inst_.professors().size(), 0);
    place_.assign(n_, {});
    counts_ = PenaltyCounts();
  }

  bool Charged(int p) const {
    if (requested_[p] >= 0) {
      return prof_day_[static_cast<size_t>(p) * days_ + requested_[p]] > 0;
    }
    return prof_days_taught_[p] == days_;
  }

  void Place(int s, int slot) {
    const int d = DayOf(slot);
    std::vector<int>& here = occ_[slot];
    for (const int u : here) {
      if (adj_[Key(s, u)]) {
        if (s == inst_.common_section() || u == inst_.common_section()) {
          ++counts_.common_clashes;
        } else {
          ++counts_.clashes;
        }
      }
    }
    clock_.Charge(4 + static_cast<int64_t>(here.size()));
    here.push_back(s);
    const int rt = inst_.room_type_of(s);
    if (++demand_[static_cast<size_t>(slot) * num_types_ + rt] ==
        Supply(rt) + 1) {
      ++counts_.room_overflows;
    }
    if (!inst_.is_extended(s) &&
        ++section_day_[static_cast<size_t>(s) * days_ + d] >= 2) {
      ++counts_.double_meetings;
    }
    const int p = inst_.professor_of(s);
    const bool before = Charged(p);
    if (++prof_day_[static_cast<size_t>(p) * days_ + d] == 1) {
      ++prof_days_taught_[p];
    }
    if (Charged(p) != before) ++counts_.days_off;
    place_[s].push_back(slot);
  }

  void Unplace(int s, int slot) {
    const int d = DayOf(slot);
    std::vector<int>& here = occ_[slot];
    here.erase(std::find(here.begin(), here.end(), s));
    for (const int u : here) {
      if (adj_[Key(s, u)]) {
        if (s == inst_.common_section() || u == inst_.common_section()) {
          --counts_.common_clashes;
        } else {
          --counts_.clashes;
        }
      }
    }
    clock_.Charge(4 + static_cast<int64_t>(here.size()));
    const int rt = inst_.room_type_of(s);
    if (demand_[static_cast<size_t>(slot) * num_types_ + rt]-- ==
        Supply(rt) + 1) {
      --counts_.room_overflows;
    }
    if (!inst_.is_extended(s) &&
        section_day_[static_cast<size_t>(s) * days_ + d]-- >= 2) {
      --counts_.double_meetings;
    }
    const int p = inst_.professor_of(s);
    const bool before = Charged(p);
    if (--prof_day_[static_cast<size_t>(p) * days_ + d] == 0) {
      --prof_days_taught_[p];
    }
    if (Charged(p) != before) --counts_.days_off;
    std::vector<int>& mine = place_[s];
    mine.erase(std::find(mine.begin(), mine.end(), slot));
  }

  void PlaceBlock(int s, int start) {
    for (int i = 0; i < inst_.meetings(s); ++i) Place(s, start + i);
  }
  void UnplaceBlock(int s) {
    while (!place_[s].empty()) Unplace(s, place_[s].back());
  }

  bool WarmUsable(int s, const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != inst_.meetings(s)) return false;
    if (inst_.is_extended(s)) {
      if (!std::binary_search(starts_[s].begin(), starts_[s].end(), slots[0])) {
        return false;
      }
      for (size_t i = 1; i < slots.size(); ++i) {
        if (slots[i] != slots[0] + static_cast<int>(i)) return false;
      }
      return true;
    }
    for (size_t i = 0; i < slots.size(); ++i) {
      if (!std::binary_search(teaching_slots_.begin(), teaching_slots_.end(),
                              slots[i])) {
        return false;
      }
      for (size_t j = 0; j < i; ++j) {
        if (slots[j] == slots[i]) return false;
      }
    }
    return true;
  }

  void GreedyPlace(int s) {
    if (inst_.is_extended(s)) {
      double best = std::numeric_limits<double>::infinity();
      std::vector<int> ties;
      for (const int start : starts_[s]) {
        PlaceBlock(s, start);
        const double v = Objective();
        UnplaceBlock(s);
        if (v < best - kEps) {
          best = v;
          ties.clear();
        }
        if (v <= best + kEps) ties.push_back(start);
      }
      PlaceBlock(s, rng_.Pick(ties));
      return;
    }
    for (int m = 0; m < inst_.meetings(s); ++m) {
      double best = std::numeric_limits<double>::infinity();
      std::vector<int> ties;
      for (const int slot : teaching_slots_) {
        if (Holds(s, slot)) continue;
        Place(s, slot);
        const double v = Objective();
        Unplace(s, slot);
        if (v < best - kEps) {
          best = v;
          ties.clear();
        }
        if (v <= best + kEps) ties.push_back(slot);
      }
      Place(s, rng_.Pick(ties));
    }
  }

  bool Holds(int s, int slot) const {
    return std::find(place_[s].begin(), place_[s].end(), slot) !=
           place_[s].end();
  }

  // Penalty attributable to one meeting of s.
  double MeetingCost(int s, int slot) const {
    double cost = 0.0;
    for (const int u : occ_[slot]) {
      if (u != s && adj_[Key(s, u)]) {
        const bool common =
            s == inst_.common_section() || u == inst_.common_section();
        cost += common ? w_.clash * w_.common_multiplier : w_.clash;
      }
    }
    const int rt = inst_.room_type_of(s);
    if (demand_[static_cast<size_t>(slot) * num_types_ + rt] > Supply(rt)) {
      cost += w_.room_overflow;
    }
    if (!inst_.is_extended(s) &&
        section_day_[static_cast<size_t>(s) * days_ + DayOf(slot)] >= 2) {
      cost += w_.double_meeting;
    }
    return cost;
  }

  double SectionCost(int s) const {
    double cost = 0.0;
    for (const int slot : place_[s]) cost += MeetingCost(s, slot);
    if (Charged(inst_.professor_of(s))) cost += w_.prof_day_off;
    return cost;
  }

  int Select() {
    if (--pool_countdown_ <= 0) {
      pool_.clear();
      for (const int s : movable_) {
        if (SectionCost(s) > kEps) pool_.push_back(s);
      }
      clock_.Charge(static_cast<int64_t>(movable_.size()) * 8);
      pool_countdown_ = kPoolRefresh;
    }
    if (!pool_.empty() && rng_.Chance(kPoolProbability)) {
      return rng_.Pick(pool_);
    }
    return rng_.Pick(movable_);
  }

  int Tenure() { return 5 + static_cast<int>(rng_.Below(10)); }

  bool Tabu(int s, int slot, double value) const {
    return tabu_until_[static_cast<size_t>(s) * num_slots_ + slot] > iter_ &&
           value >= best_value_ - kEps;
  }

  // Chooses among (candidate, value) pairs; -1 when there is none.
  int Choose(const std::vector<std::pair<int, double>>& candidates,
             double before, bool* forced) {
    *forced = false;
    if (candidates.empty()) return -1;
    if (rng_.Chance(kWalkProbability)) {
      *forced = true;
      return rng_.Pick(candidates).first;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [c, v] : candidates) best = std::min(best, v);
    if (best > before + kEps) return -1;
    std::vector<int> ties;
    for (const auto& [c, v] : candidates) {
      if (v <= best + kEps) ties.push_back(c);
    }
    return rng_.Pick(ties);
  }

  void MoveMeeting(int s) {
    std::vector<int>& mine = place_[s];
    size_t idx = rng_.Below(mine.size());
    if (rng_.Chance(0.7)) {
      double worst = -1.0;
      std::vector<size_t> ties;
      for (size_t i = 0; i < mine.size(); ++i) {
        const double c = MeetingCost(s, mine[i]);
        if (c > worst + kEps) {
          worst = c;
          ties.clear();
        }
        if (c >= worst - kEps) ties.push_back(i);
      }
      idx = rng_.Pick(ties);
    }
    const int old = mine[idx];
    const double before = Objective();
    Unplace(s, old);
    std::vector<std::pair<int, double>> candidates;
    for (const int slot : teaching_slots_) {
      if (slot == old || Holds(s, slot)) continue;
      Place(s, slot);
      const double v = Objective();
      Unplace(s, slot);
      if (!Tabu(s, slot, v)) candidates.emplace_back(slot, v);
    }
    bool forced;
    const int chosen = Choose(candidates, before, &forced);
    if (chosen < 0) {
      Place(s, old);
      return;
    }
    Place(s, chosen);
    tabu_until_[static_cast<size_t>(s) * num_slots_ + old] = iter_ + Tenure();
  }

  void MoveBlock(int s) {
    const int old = *std::min_element(place_[s].begin(), place_[s].end());
    const double before = Objective();
    UnplaceBlock(s);
    std::vector<std::pair<int, double>> candidates;
    for (const int start : starts_[s]) {
      if (start == old) continue;
      PlaceBlock(s, start);
      const double v = Objective();
      UnplaceBlock(s);
      if (!Tabu(s, start, v)) candidates.emplace_back(start, v);
    }
    bool forced;
    const int chosen = Choose(candidates, before, &forced);
    if (chosen < 0) {
      PlaceBlock(s, old);
      return;
    }
    PlaceBlock(s, chosen);
    tabu_until_[static_cast<size_t>(s) * num_slots_ + old] = iter_ + Tenure();
  }

  void Load(const Placement& placement) {
    Reset();
    clock_.Charge(static_cast<int64_t>(num_slots_) * (num_types_ + 1) + n_);
    for (int s = 0; s < n_; ++s) {
      for (const int slot : placement[s]) Place(s, slot);
    }
  }

  void Restart(Exchange* exchange) {
    if (exchange != nullptr) {
      std::lock_guard<std::mutex> lock(exchange->mu);
      if (exchange->value < best_value_ - kEps) {
        best_value_ = exchange->value;
        best_place_ = exchange->best;
        Load(best_place_);
        best_counts_ = counts_;
      }
    }
    Load(best_place_);
    const int kicks = std::max<int>(1, static_cast<int>(movable_.size()) / 20);
    for (int k = 0; k < kicks; ++k) {
      const int s = rng_.Pick(movable_);
      if (inst_.is_extended(s)) {
        UnplaceBlock(s);
        PlaceBlock(s, rng_.Pick(starts_[s]));
      } else {
        const int old = rng_.Pick(place_[s]);
        Unplace(s, old);
        int slot;
        do {
          slot = rng_.Pick(teaching_slots_);
        } while (Holds(s, slot));
        Place(s, slot);
      }
    }
    pool_countdown_ = 0;
  }

  void Publish(Exchange* exchange) {
    std::lock_guard<std::mutex> lock(exchange->mu);
    if (best_value_ < exchange->value - kEps) {
      exchange->value = best_value_;
      exchange->best = best_place_;
      ++exchange->version;
    }
  }

  Timetable ToTimetable(const Placement& placement) const {
    Timetable tt(n_);
    for (int s = 0; s < n_; ++s) {
      for (const int slot : placement[s]) {
        tt.sections[s].push_back({slot / periods_, slot % periods_, -1});
      }
      std::sort(tt.sections[s].begin(), tt.sections[s].end());
    }
    return tt;
  }

  const Instance& inst_;
  const SoftWeights w_;
  const int n_;
  const int days_;
  const int periods_;
  const int num_slots_;
  const int num_types_;
  const std::vector<int>& movable_;
  const std::vector<uint8_t>& is_fixed_;
  Rng rng_;
  WorkClock clock_;

  std::vector<uint8_t> adj_;
  std::vector<int> teaching_slots_;
  std::vector<std::vector<int>> starts_;
  std::vector<int> requested_;

  std::vector<std::vector<int>> occ_;
  std::vector<int> demand_;
  std::vector<int> section_day_;
  std::vector<int> prof_day_;
  std::vector<int> prof_days_taught_;
  Placement place_;
  PenaltyCounts counts_;

  std::vector<int64_t> tabu_until_;
  std::vector<int> pool_;
  int pool_countdown_ = 0;
  int64_t iter_ = 0;

  double best_value_ = 0.0;
  Placement best_place_;
  PenaltyCounts best_counts_;
};

Placement ToPlacement(const Instance& instance, const Timetable& tt) {
  const int periods = instance.grid().periods_per_day;
  Placement out(instance.num_sections());
  for (int s = 0; s < instance.num_sections() &&
                  s < static_cast<int>(tt.sections.size());
       ++s) {
    for (const Meeting& m : tt.sections[s]) {
      if (m.day < 0 || m.day >= instance.grid().days || m.period < 0 ||
          m.period >= periods) {
        out[s].clear();
        break;
      }
      out[s].push_back(m.day * periods + m.period);
    }
  }
  return out;
}

}  // namespace

absl::StatusOr<SolveResult> Solve(const Instance& instance,
                                  const ConflictGraph& graph,
                                  const SoftWeights& weights,
                                  const SolveOptions& options) {
  if (options.budget_seconds <= 0) {
    return absl::InvalidArgumentError("budget must be positive");
  }
  const int n = instance.num_sections();
  if (graph.num_vertices() != n) {
    return absl::InvalidArgumentError("graph does not match the instance");
  }
  std::vector<uint8_t> is_fixed(n, 0);
  Placement fixed(n);
  if (options.fixed.has_value()) {
    if (static_cast<int>(options.fixed->sections.size()) != n) {
      return absl::InvalidArgumentError("fixed timetable has the wrong shape");
    }
    const std::vector<Violation> v =
        CheckStructure(instance, *options.fixed, /*allow_unplaced=*/true);
    if (!v.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("fixed timetable: ", FormatViolations(v)));
    }
    fixed = ToPlacement(instance, *options.fixed);
    for (int s = 0; s < n; ++s) is_fixed[s] = !fixed[s].empty();
  }
  std::vector<uint8_t> wanted(n, options.restrict.has_value() ? 0 : 1);
  if (options.restrict.has_value()) {
    for (const int s : *options.restrict) {
      if (s < 0 || s >= n) {
        return absl::InvalidArgumentError("restricted section out of range");
      }
      wanted[s] = 1;
    }
  }
  std::vector<int> movable;
  const int teaching_slots =
      instance.grid().days *
      static_cast<int>(instance.grid().TeachingPeriods().size());
  for (int s = 0; s < n; ++s) {
    if (!wanted[s] || is_fixed[s]) continue;
    if (instance.is_extended(s) &&
        BlockStarts(instance.grid(), instance.meetings(s)).empty()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "no legal start for extended section '", instance.sections()[s].id,
          "'"));
    }
    if (!instance.is_extended(s) && instance.meetings(s) > teaching_slots) {
      return absl::FailedPreconditionError(absl::StrCat(
          "section '", instance.sections()[s].id, "' has more meetings than ",
          "the grid has teaching slots"));
    }
    movable.push_back(s);
  }
  Placement warm;
  if (options.warm.has_value()) warm = ToPlacement(instance, *options.warm);

  const int workers = std::max(1, options.workers);
  std::vector<SolveResult> results(workers);
  std::vector<PenaltyCounts> counts(workers);
  std::vector<double> values(workers);
  auto work = [&](int w, Exchange* exchange) {
    SlotSearch search(instance, graph, weights, movable, is_fixed,
                      options.seed + static_cast<uint64_t>(w));
    search.Initialize(fixed, warm);
    search.Run(options, exchange, &results[w]);
    counts[w] = search.best_counts();
    values[w] = search.best_value();
  };
  if (workers == 1) {
    work(0, nullptr);
  } else {
    Exchange exchange;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w, &exchange);
    for (std::thread& t : threads) t.join();
  }
  int best = 0;
  for (int w = 1; w < workers; ++w) {
    if (values[w] < values[best] - kEps) best = w;
  }
  SolveResult result = std::move(results[best]);
  absl::StatusOr<ConflictReport> report =
      Score(instance, graph, result.timetable, weights);
  if (!report.ok()) return report.status();
  if (!(report->counts == counts[best]) || report->total != values[best]) {
    return absl::InternalError(absl::StrCat(
        "incremental timetable objective ", values[best],
        " disagrees with score ", report->total));
  }
  result.report = *std::move(report);
  return result;
}

namespace {

struct Interval {
  int section;
  int begin;  // period
  int end;    // exclusive
};

// Rooms (0..k-1) for intervals minimizing per-room double bookings.
class RoomPacker {
 public:
  RoomPacker(std::vector<Interval> items, int rooms, int periods)
      : items_(std::move(items)), k_(rooms), periods_(periods) {
    std::sort(items_.begin(), items_.end(), [](const Interval& a,
                                               const Interval& b) {
      if (a.begin != b.begin) return a.begin < b.begin;
      if (a.end != b.end) return a.end > b.end;
      return a.section < b.section;
    });
  }

  const std::vector<Interval>& items() const { return items_; }

  int64_t LowerBound() const {
    std::vector<int> demand(periods_, 0);
    for (const Interval& it : items_) {
      for (int t = it.begin; t < it.end; ++t) ++demand[t];
    }
    int64_t lb = 0;
    for (const int d : demand) lb += std::max(0, d - k_);
    return lb;
  }

  // Returns the cost; `rooms` receives one room per item (sorted order).
  int64_t Solve(std::vector<int>* rooms) {
    Greedy(rooms);
    int64_t cost = Cost(*rooms);
    const int64_t lb = LowerBound();
    if (cost > lb && items_.size() <= 14) {
      best_cost_ = cost;
      best_ = *rooms;
      occ_.assign(static_cast<size_t>(k_) * periods_, 0);
      current_.assign(items_.size(), -1);
      Branch(0, 0, -1, lb);
      *rooms = best_;
      cost = best_cost_;
    }
    return cost;
  }

 private:
  int64_t Cost(const std::vector<int>& rooms) const {
    std::vector<int> occ(static_cast<size_t>(k_) * periods_, 0);
    int64_t cost = 0;
    for (size_t i = 0; i < items_.size(); ++i) {
      for (int t = items_[i].begin; t < items_[i].end; ++t) {
        if (occ[static_cast<size_t>(rooms[i]) * periods_ + t]++ > 0) ++cost;
      }
    }
    return cost;
  }

  void Greedy(std::vector<int>* rooms) {
    std::vector<int> occ(static_cast<size_t>(k_) * periods_, 0);
    rooms->assign(items_.size(), 0);
    for (size_t i = 0; i < items_.size(); ++i) {
      int best = 0;
      int best_overlap = std::numeric_limits<int>::max();
      for (int r = 0; r < k_; ++r) {
        int overlap = 0;
        for (int t = items_[i].begin; t < items_[i].end; ++t) {
          overlap += occ[static_cast<size_t>(r) * periods_ + t];
        }
        if (overlap < best_overlap) {
          best_overlap = overlap;
          best = r;
        }
      }
      (*rooms)[i] = best;
      for (int t = items_[i].begin; t < items_[i].end; ++t) {
        ++occ[static_cast<size_t>(best) * periods_ + t];
      }
    }
  }

  void Branch(size_t i, int64_t cost, int max_used, int64_t lb) {
    if (cost >= best_cost_) return;
    if (i == items_.size()) {
      best_cost_ = cost;
      best_ = current_;
      return;
    }
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int r = 0; r <= limit && best_cost_ > lb; ++r) {
      int64_t added = 0;
      for (int t = items_[i].begin; t < items_[i].end; ++t) {
        if (occ_[static_cast<size_t>(r) * periods_ + t]++ > 0) ++added;
      }
      current_[i] = r;
      Branch(i + 1, cost + added, std::max(max_used, r), lb);
      for (int t = items_[i].begin; t < items_[i].end; ++t) {
        --occ_[static_cast<size_t>(r) * periods_ + t];
      }
    }
  }

  std::vector<Interval> items_;
  int k_;
  int periods_;
  std::vector<int> occ_;
  std::vector<int> current_;
  std::vector<int> best_;
  int64_t best_cost_ = 0;
};

}  // namespace

absl::StatusOr<RoomAssignment> AssignRooms(const Instance& instance,
                                           const Timetable& timetable) {
  const std::vector<Violation> v =
      CheckStructure(instance, timetable, /*allow_unplaced=*/true);
  if (!v.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("structural violation: ", FormatViolations(v)));
  }
  const int days = instance.grid().days;
  const int periods = instance.grid().periods_per_day;
  RoomAssignment out;
  out.timetable = timetable;
  for (int rt = 0; rt < instance.num_room_types(); ++rt) {
    const std::vector<int>& rooms = instance.rooms_of_type(rt);
    for (int d = 0; d < days; ++d) {
      std::vector<Interval> items;
      for (int s = 0; s < instance.num_sections(); ++s) {
        if (instance.room_type_of(s) != rt) continue;
        const auto& ms = timetable.sections[s];
        if (ms.empty() || (instance.is_extended(s) && ms[0].day != d)) continue;
        if (instance.is_extended(s)) {
          items.push_back({s, ms.front().period, ms.back().period + 1});
        } else {
          for (const Meeting& m : ms) {
            if (m.day == d) items.push_back({s, m.period, m.period + 1});
          }
        }
      }
      if (items.empty()) continue;
      if (rooms.empty()) {
        return absl::FailedPreconditionError(absl::StrCat(
            "room-type '", instance.room_type_names()[rt], "' has no rooms"));
      }
      RoomPacker packer(std::move(items), static_cast<int>(rooms.size()),
                        periods);
      std::vector<int> chosen;
      out.double_bookings += packer.Solve(&chosen);
      out.lower_bound += packer.LowerBound();
      const auto& sorted = packer.items();
      for (size_t i = 0; i < sorted.size(); ++i) {
        for (Meeting& m : out.timetable.sections[sorted[i].section]) {
          if (m.day == d && m.period >= sorted[i].begin &&
              m.period < sorted[i].end) {
            m.room = rooms[chosen[i]];
          }
        }
      }
    }
  }
  return out;
}

absl::StatusOr<PhasedResult> PhasedSolve(const Instance& instance,
                                         const ConflictGraph& graph,
                                         const SoftWeights& weights,
                                         const PhasedOptions& options) {
  PhasedResult result;
  std::vector<int> anchors;
  for (int s = 0; s < instance.num_sections(); ++s) {
    if ((instance.is_extended(s) && instance.meetings(s) >= 2) ||
        s == instance.common_section()) {
      anchors.push_back(s);
    }
  }
  result.phase_a = Timetable(instance.num_sections());
  if (!anchors.empty()) {
    SolveOptions a;
    a.budget_seconds = options.phase_a_seconds;
    a.seed = options.seed;
    a.workers = options.workers;
    a.restrict = anchors;
    a.warm = options.warm;
    absl::StatusOr<SolveResult> phase_a = Solve(instance, graph, weights, a);
    if (!phase_a.ok()) return phase_a.status();
    result.phase_a = phase_a->timetable;
    result.seconds += phase_a->seconds;
  }

  SolveOptions b;
  b.budget_seconds = options.phase_b_seconds / 2;
  b.seed = options.seed;
  b.workers = options.workers;
  b.fixed = result.phase_a;
  b.warm = options.warm;
  absl::StatusOr<SolveResult> phase_b = Solve(instance, graph, weights, b);
  if (!phase_b.ok()) return phase_b.status();
  result.seconds += phase_b->seconds;
  Timetable slots = phase_b->timetable;

  // The phase-A slots can rule out a zero score; release them for the rest
  // of the budget.
  if (phase_b->report.total > 0) {
    SolveOptions joint;
    joint.budget_seconds = options.phase_b_seconds - phase_b->seconds;
    joint.seed = options.seed + 1;
    joint.workers = options.workers;
    joint.warm = slots;
    absl::StatusOr<SolveResult> polished =
        Solve(instance, graph, weights, joint);
    if (!polished.ok()) return polished.status();
    result.seconds += polished->seconds;
    if (polished->report.total < phase_b->report.total) {
      slots = polished->timetable;
    }
  }

  absl::StatusOr<RoomAssignment> rooms = AssignRooms(instance, slots);
  if (!rooms.ok()) return rooms.status();
  result.rooms = *std::move(rooms);
  result.timetable = result.rooms.timetable;
  absl::StatusOr<ConflictReport> report =
      Score(instance, graph, result.timetable, weights);
  if (!report.ok()) return report.status();
  result.report = *std::move(report);
  return result;
}

}  // namespace sectime
