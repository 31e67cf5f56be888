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

#include "sectime/timetable.h"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "sectime/generator.h"
#include "sectime/greedy.h"
#include "sectime/timetable_solver.h"
#include "test_util.h"

namespace sectime {
namespace {

using ::sectime::testing::DataBuilder;
using ::sectime::testing::MakeSectioning;
using ::sectime::testing::Unwrap;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

using SlotLists = std::vector<std::vector<oracle::Pair>>;

Timetable FromSlots(const SlotLists& slots) {
  Timetable tt(static_cast<int>(slots.size()));
  for (size_t s = 0; s < slots.size(); ++s) {
    for (const auto& [d, t] : slots[s]) tt.sections[s].push_back({d, t, -1});
    std::sort(tt.sections[s].begin(), tt.sections[s].end());
  }
  return tt;
}

SlotLists ToSlots(const Timetable& tt) {
  SlotLists out(tt.sections.size());
  for (size_t s = 0; s < tt.sections.size(); ++s) {
    for (const Meeting& m : tt.sections[s]) out[s].push_back({m.day, m.period});
  }
  return out;
}

ConflictGraph GraphOf(int n, const oracle::EdgeSet& edges) {
  ConflictGraph g(n);
  for (const auto& [s, t] : edges) g.AddEdge(s, t, kStudentEdge);
  return g;
}

// Base pairs plus every pair of sections of distinct courses that one
// student could attend together.
oracle::EdgeSet PotentialEdges(const InstanceData& d) {
  oracle::EdgeSet edges = oracle::BaseEdges(d);
  const int n = static_cast<int>(d.sections.size());
  for (const auto& st : oracle::Students(d)) {
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) {
        const int cs = oracle::CourseOf(d, s);
        const int ct = oracle::CourseOf(d, t);
        if (cs != ct &&
            std::count(st.courses.begin(), st.courses.end(), cs) &&
            std::count(st.courses.begin(), st.courses.end(), ct)) {
          edges.insert({s, t});
        }
      }
    }
  }
  return edges;
}

PeriodGrid Grid(int periods, std::optional<int> lunch) {
  PeriodGrid g;
  g.days = 1;
  g.periods_per_day = periods;
  g.lunch_period = lunch;
  return g;
}

TEST(BlockStartsTest, Examples) {
  EXPECT_THAT(BlockStarts(Grid(7, 3), 4), IsEmpty());
  EXPECT_THAT(BlockStarts(Grid(7, 4), 4), ElementsAre(0));
  EXPECT_THAT(BlockStarts(Grid(7, std::nullopt), 3), ElementsAre(0, 1, 2, 3, 4));
  EXPECT_THAT(BlockStarts(Grid(7, 3), 2), ElementsAre(0, 1, 4, 5));
  EXPECT_THAT(BlockStarts(Grid(7, 3), 1), IsEmpty());
  EXPECT_THAT(BlockStarts(Grid(7, 3), 5), IsEmpty());
}

TEST(BlockStartsTest, MatchesWindowFormulas) {
  for (int periods = 1; periods <= 10; ++periods) {
    for (int lunch = -1; lunch < periods; ++lunch) {
      const PeriodGrid g =
          Grid(periods, lunch < 0 ? std::nullopt : std::optional<int>(lunch));
      for (int len = 2; len <= 4; ++len) {
        EXPECT_EQ(BlockStarts(g, len), oracle::WindowStarts(g, len))
            << periods << " " << lunch << " " << len;
      }
    }
  }
}

DataBuilder Small() {
  DataBuilder b;
  b.Grid(2, 7, 3).AddRoom("R1", "room").AddRoom("R2", "room");
  b.AddRoom("L1", "lab");
  b.AddProfessor("P").AddProfessor("Q", 1).AddProfessor("S");
  b.AddCourse("A").AddCourse("B").AddCourse("C");
  b.AddSection("a", "A", 5, "P", "room", 2);
  b.AddSection("b", "B", 5, "Q", "room", 1);
  b.AddSection("c", "C", 5, "S", "lab", 2, true);
  b.AddGroup("G", 2, {"A", "B", "C"});
  return b;
}

TEST(LegalStartsTest, PerDay) {
  const Instance inst = Small().Make();
  const std::vector<Slot> starts = Unwrap(LegalStarts(inst, 2));
  EXPECT_EQ(starts, (std::vector<Slot>{{0, 0}, {0, 1}, {0, 4}, {0, 5},
                                       {1, 0}, {1, 1}, {1, 4}, {1, 5}}));
  EXPECT_EQ(LegalStarts(inst, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(CheckStructureTest, Rules) {
  const Instance inst = Small().Make();
  auto rules = [&](const SlotLists& slots, bool allow = false) {
    std::vector<std::string> out;
    for (const Violation& v : CheckStructure(inst, FromSlots(slots), allow)) {
      out.push_back(v.rule);
    }
    return out;
  };
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {{0, 1}}, {{0, 4}, {0, 5}}}), IsEmpty());
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {}, {{0, 4}, {0, 5}}}),
              ElementsAre("unplaced"));
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {}, {{0, 4}, {0, 5}}}, true), IsEmpty());
  EXPECT_THAT(rules({{{0, 0}}, {{0, 1}}, {{0, 4}, {0, 5}}}),
              ElementsAre("meeting_count"));
  EXPECT_THAT(rules({{{0, 0}, {1, 3}}, {{0, 1}}, {{0, 4}, {0, 5}}}),
              ElementsAre("lunch"));
  EXPECT_THAT(rules({{{0, 0}, {0, 0}}, {{0, 1}}, {{0, 4}, {0, 5}}}),
              ElementsAre("duplicate_slot"));
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {{0, 9}}, {{0, 4}, {0, 5}}}),
              ElementsAre("slot_range"));
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {{0, 1}}, {{0, 4}, {1, 4}}}),
              ElementsAre("contiguity"));
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {{0, 1}}, {{0, 2}, {0, 3}}}),
              ::testing::Contains("lunch"));
  EXPECT_THAT(rules({{{0, 0}, {1, 0}}, {{0, 1}}}), ElementsAre("shape"));

  Timetable rooms = FromSlots({{{0, 0}, {1, 0}}, {{0, 1}}, {{0, 4}, {0, 5}}});
  rooms.sections[0][0].room = 0;
  EXPECT_THAT(CheckStructure(inst, rooms), ::testing::Not(IsEmpty()));
  for (auto& ms : rooms.sections) {
    for (Meeting& m : ms) m.room = 0;
  }
  std::vector<std::string> got;
  for (const Violation& v : CheckStructure(inst, rooms)) got.push_back(v.rule);
  EXPECT_THAT(got, ElementsAre("room_type", "room_type"));
  rooms.sections[2][0].room = 2;
  rooms.sections[2][1].room = 2;
  EXPECT_THAT(CheckStructure(inst, rooms), IsEmpty());
}

TEST(CheckStructureTest, BlockStartOutsideWindow) {
  DataBuilder b;
  b.Grid(1, 7, 4).AddRoom("L1", "lab").AddProfessor("P").AddCourse("C");
  b.AddSection("c", "C", 5, "P", "lab", 3, true);
  b.AddGroup("G", 1, {"C"});
  const Instance inst = b.Make();
  EXPECT_THAT(CheckStructure(inst, FromSlots({{{0, 1}, {0, 2}, {0, 3}}})),
              IsEmpty());
  // 5..7 overruns the day; 4 is lunch.
  const auto v = CheckStructure(inst, FromSlots({{{0, 5}, {0, 6}, {0, 7}}}));
  ASSERT_FALSE(v.empty());
}

TEST(ScoreTest, SingleAndCommonClash) {
  DataBuilder b;
  b.Grid(2, 4, std::nullopt).AddRoom("R1", "room").AddRoom("R2", "room");
  b.AddRoom("H", "hall");
  b.AddProfessor("P").AddProfessor("Q").AddProfessor("S");
  b.AddCourse("A").AddCourse("B").AddCourse("M");
  b.AddSection("a", "A", 2, "P", "room").AddSection("b", "B", 2, "Q", "room");
  b.AddSection("m", "M", 2, "S", "hall");
  b.AddGroup("G", 2, {"A", "B", "M"}).Common("m");
  const Instance inst = b.Make();
  const Sectioning f = MakeSectioning(inst, {{"a", "b", "m"}, {"a", "b", "m"}});
  const ConflictGraph g = Unwrap(ScgOf(inst, f));
  SoftWeights w;
  w.prof_day_off = 0.0;
  const ConflictReport one =
      Unwrap(Score(inst, g, FromSlots({{{0, 0}}, {{0, 0}}, {{1, 1}}}), w));
  EXPECT_EQ(one.total, 1000.0);
  EXPECT_EQ(one.counts.clashes, 1);
  EXPECT_EQ(one.clash_count(), 1);
  ASSERT_EQ(one.clashes.size(), 1u);
  EXPECT_EQ(one.clashes[0], (ClashWitness{0, 1, 0, 0, false}));
  const ConflictReport common =
      Unwrap(Score(inst, g, FromSlots({{{0, 0}}, {{1, 0}}, {{1, 0}}}), w));
  EXPECT_EQ(common.total, 10000.0);
  EXPECT_EQ(common.counts.common_clashes, 1);
  EXPECT_TRUE(common.clashes[0].common);
  const ConflictReport none =
      Unwrap(Score(inst, g, FromSlots({{{0, 0}}, {{0, 1}}, {{1, 0}}}), w));
  EXPECT_EQ(none.total, 0.0);
  EXPECT_EQ(Score(inst, g, FromSlots({{{0, 0}}, {{0, 1}}}), w).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(ScoreTest, DayOffRule) {
  DataBuilder b;
  b.Grid(2, 4, std::nullopt).AddRoom("R1", "room").AddRoom("R2", "room");
  b.AddProfessor("P", 1).AddProfessor("Q");
  b.AddCourse("A").AddCourse("B");
  b.AddSection("a", "A", 2, "P", "room", 2).AddSection("b", "B", 2, "Q", "room", 2);
  b.AddGroup("G", 1, {"A"}).AddGroup("H", 1, {"B"});
  const Instance inst = b.Make();
  const ConflictGraph g = BaseScg(inst);
  const SoftWeights w;
  // P teaches on its requested day 1; Q teaches every day.
  const ConflictReport r = Unwrap(
      Score(inst, g, FromSlots({{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}), w));
  EXPECT_EQ(r.counts.days_off, 2);
  EXPECT_THAT(r.day_off_professors, ElementsAre(0, 1));
  const ConflictReport fixed = Unwrap(
      Score(inst, g, FromSlots({{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}}), w));
  EXPECT_EQ(fixed.counts.days_off, 0);
  EXPECT_EQ(fixed.counts.double_meetings, 2);
  EXPECT_EQ(fixed.total, 2 * w.double_meeting);
}

TEST(ScoreTest, RoomOverflowPerTypeAndSlot) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt).AddRoom("R1", "room");
  b.AddProfessor("P").AddProfessor("Q");
  b.AddCourse("A").AddCourse("B");
  b.AddSection("a", "A", 2, "P", "room").AddSection("b", "B", 2, "Q", "room");
  b.AddGroup("G", 1, {"A"}).AddGroup("H", 1, {"B"});
  const Instance inst = b.Make();
  ConflictGraph empty(inst.num_sections());
  SoftWeights w;
  w.prof_day_off = 0;
  const ConflictReport r =
      Unwrap(Score(inst, empty, FromSlots({{{0, 2}}, {{0, 2}}}), w));
  EXPECT_EQ(r.counts.room_overflows, 1);
  ASSERT_EQ(r.room_overflows.size(), 1u);
  EXPECT_EQ(r.room_overflows[0].demand, 2);
  EXPECT_EQ(r.room_overflows[0].supply, 1);
  EXPECT_EQ(r.total, 100.0);
}

TEST(ScoreTest, AgreesWithOracleAndIsPure) {
  std::mt19937_64 rng(5);
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const PlantedInstance planted = Unwrap(GeneratePlanted(seed));
    const InstanceData& d = planted.data;
    const Instance inst = Unwrap(Instance::Create(d));
    const Sectioning f = Unwrap(GreedySection(inst, seed)).sectioning;
    const ConflictGraph g = Unwrap(ScgOf(inst, f));
    oracle::EdgeSet edges;
    for (const ConflictGraph::Edge& e : g.Edges()) edges.insert({e.s, e.t});
    for (int trial = 0; trial < 20; ++trial) {
      SlotLists slots(d.sections.size());
      for (size_t s = 0; s < slots.size(); ++s) {
        const auto options = oracle::Placements(d, static_cast<int>(s));
        slots[s] = options[rng() % options.size()];
      }
      oracle::Counts c;
      const double expected = oracle::Score(d, edges, slots, d.soft_weights, &c);
      const Timetable tt = FromSlots(slots);
      const ConflictReport r = Unwrap(Score(inst, g, tt, d.soft_weights));
      EXPECT_DOUBLE_EQ(r.total, expected);
      EXPECT_EQ(r.counts.clashes, c.clashes);
      EXPECT_EQ(r.counts.common_clashes, c.common_clashes);
      EXPECT_EQ(r.counts.room_overflows, c.room_overflows);
      EXPECT_EQ(r.counts.double_meetings, c.double_meetings);
      EXPECT_EQ(r.counts.days_off, c.days_off);
      EXPECT_EQ(r.total, WeightedTotal(r.counts, d.soft_weights));
      const ConflictReport again = Unwrap(Score(inst, g, tt, d.soft_weights));
      EXPECT_EQ(again.total, r.total);
      EXPECT_EQ(again.clashes, r.clashes);
    }
  }
}

TEST(ScoreTest, PlantedTimetableHasZeroScoreOnEveryPotentialEdge) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const PlantedInstance planted = Unwrap(GeneratePlanted(seed));
    const oracle::EdgeSet edges = PotentialEdges(planted.data);
    EXPECT_EQ(oracle::Score(planted.data, edges, ToSlots(planted.timetable),
                            planted.data.soft_weights),
              0.0)
        << "seed " << seed;
  }
}

TEST(ExtractTabuTest, StudentsOfBothClashingSections) {
  DataBuilder b;
  b.Grid(1, 4, std::nullopt).AddRoom("R1", "room").AddRoom("R2", "room");
  b.AddProfessor("P").AddProfessor("Q").AddProfessor("S");
  b.AddCourse("A").AddCourse("B");
  b.AddSection("a1", "A", 2, "P", "room").AddSection("a2", "A", 2, "S", "room");
  b.AddSection("b", "B", 3, "Q", "room");
  b.AddGroup("G", 3, {"A", "B"});
  const Instance inst = b.Make();
  const Sectioning f =
      MakeSectioning(inst, {{"a1", "b"}, {"a2", "b"}, {"a1", "b"}});
  const ConflictGraph g = Unwrap(ScgOf(inst, f));
  SoftWeights w;
  w.prof_day_off = 0;
  const ConflictReport r =
      Unwrap(Score(inst, g, FromSlots({{{0, 0}}, {{0, 1}}, {{0, 0}}}), w));
  ASSERT_EQ(r.clashes.size(), 1u);
  const TabuList tabu = ExtractTabu(inst, f, r);
  EXPECT_EQ(tabu.pairs(), (std::vector<std::pair<int, int>>{
                              {0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  const ConflictReport clean =
      Unwrap(Score(inst, g, FromSlots({{{0, 0}}, {{0, 1}}, {{0, 2}}}), w));
  EXPECT_TRUE(ExtractTabu(inst, f, clean).empty());
}

TEST(TimetableIoTest, RoundTripAndErrors) {
  const Instance inst = Small().Make();
  Timetable tt = FromSlots({{{0, 0}, {1, 0}}, {{0, 1}}, {{0, 4}, {0, 5}}});
  const std::string bare = SerializeTimetable(inst, tt);
  EXPECT_THAT(bare, HasSubstr("a 0 0 -\n"));
  EXPECT_EQ(Unwrap(ParseTimetable(inst, bare)), tt);
  for (Meeting& m : tt.sections[0]) m.room = 0;
  tt.sections[1][0].room = 1;
  for (Meeting& m : tt.sections[2]) m.room = 2;
  const std::string text = SerializeTimetable(inst, tt);
  EXPECT_THAT(text, HasSubstr("c 0 4 L1\n"));
  EXPECT_EQ(Unwrap(ParseTimetable(inst, text)), tt);
  EXPECT_FALSE(ParseTimetable(inst, "zz 0 0 -\n").ok());
  EXPECT_FALSE(ParseTimetable(inst, "a 0\n").ok());
  const ConflictReport r = Unwrap(Score(inst, BaseScg(inst), tt, SoftWeights{}));
  const std::string json = SerializeReport(inst, r);
  EXPECT_THAT(json, HasSubstr("\"total\""));
  EXPECT_THAT(json, HasSubstr("\"clashes\""));
}

// ---- Solver ----

TEST(SolveTest, MatchesExhaustiveOptimumOnSmallInstance) {
  const DataBuilder b = Small();
  const Instance inst = b.Make();
  const Sectioning f =
      MakeSectioning(inst, {{"a", "b", "c"}, {"a", "b", "c"}});
  const ConflictGraph g = Unwrap(ScgOf(inst, f));
  oracle::EdgeSet edges;
  for (const ConflictGraph::Edge& e : g.Edges()) edges.insert({e.s, e.t});
  // Section a meets twice on two days: either P teaches both days or a
  // repeats on one day, so the optimum is one day-off penalty.
  const double best =
      oracle::BestTimetableScore(b.Build(), edges, inst.soft_weights());
  EXPECT_EQ(best, inst.soft_weights().prof_day_off);
  SolveOptions options;
  options.budget_seconds = 1.0;
  const SolveResult r = Unwrap(Solve(inst, g, inst.soft_weights(), options));
  EXPECT_EQ(r.report.total, best);
  EXPECT_THAT(CheckStructure(inst, r.timetable), IsEmpty());
  EXPECT_EQ(Unwrap(Score(inst, g, r.timetable, inst.soft_weights())).total,
            r.report.total);
}

TEST(SolveTest, RestrictAndFixed) {
  const Instance inst = Small().Make();
  const ConflictGraph g = Unwrap(ScgOf(
      inst, MakeSectioning(inst, {{"a", "b", "c"}, {"a", "b", "c"}})));
  Timetable fixed(inst.num_sections());
  fixed.sections[2] = {{0, 0, -1}, {0, 1, -1}};
  SolveOptions options;
  options.budget_seconds = 1.0;
  options.restrict = std::vector<int>{1};
  options.fixed = fixed;
  const SolveResult r = Unwrap(Solve(inst, g, inst.soft_weights(), options));
  EXPECT_FALSE(r.timetable.placed(0));
  EXPECT_TRUE(r.timetable.placed(1));
  EXPECT_EQ(r.timetable.sections[2], fixed.sections[2]);
  EXPECT_EQ(r.report.clash_count(), 0);
}

TEST(SolveTest, ReachesExhaustiveOptimumOnOneDay) {
  // One day, so repeated meetings and the day-off rule interact.
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    std::mt19937_64 rng(seed);
    DataBuilder b;
    b.Grid(1, 5, 2).AddRoom("R1", "room").AddRoom("R2", "room");
    b.AddRoom("L1", "lab");
    b.AddProfessor("P").AddProfessor("Q").AddProfessor("S");
    b.AddCourse("A").AddCourse("B").AddCourse("C").AddCourse("D");
    b.AddSection("a", "A", 4, "P", "room");
    b.AddSection("b", "B", 4, rng() % 2 ? "P" : "Q", "room");
    b.AddSection("c", "C", 4, "S", "lab", 2, true);
    b.AddSection("d", "D", 4, "Q", "room", 1 + rng() % 2);
    b.AddGroup("G", 2, {"A", "B", "C", "D"});
    const InstanceData d = b.Build();
    const Instance inst = b.Make();
    const Sectioning f = MakeSectioning(
        inst, {{"a", "b", "c", "d"}, {"a", "b", "c", "d"}});
    const ConflictGraph g = Unwrap(ScgOf(inst, f));
    oracle::EdgeSet edges;
    for (const ConflictGraph::Edge& e : g.Edges()) edges.insert({e.s, e.t});
    const double best = oracle::BestTimetableScore(d, edges, d.soft_weights);
    SolveOptions options;
    options.budget_seconds = 1.0;
    options.seed = seed;
    const SolveResult r = Unwrap(Solve(inst, g, d.soft_weights, options));
    EXPECT_EQ(r.report.total, best) << "seed " << seed;
  }
}

TEST(SolveTest, DeterministicWithOneWorker) {
  GeneratorSpec gen;
  gen.preset = "easy";
  const Instance inst = Unwrap(Instance::Create(Unwrap(GenerateInstance(gen, 1))));
  const ConflictGraph g =
      Unwrap(ScgOf(inst, Unwrap(GreedySection(inst, 1)).sectioning));
  SolveOptions options;
  options.budget_seconds = 0.2;
  options.seed = 3;
  const SolveResult a = Unwrap(Solve(inst, g, inst.soft_weights(), options));
  const SolveResult b = Unwrap(Solve(inst, g, inst.soft_weights(), options));
  EXPECT_EQ(a.timetable, b.timetable);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_THAT(CheckStructure(inst, a.timetable), IsEmpty());
}

// ---- Rooms ----

// Minimum double bookings over every room choice (extended blocks keep one
// room), by enumeration.
int64_t ExhaustiveDoubleBookings(const InstanceData& d, const SlotLists& slots) {
  std::vector<std::vector<int>> rooms_of(d.sections.size());
  for (size_t s = 0; s < d.sections.size(); ++s) {
    for (size_t r = 0; r < d.rooms.size(); ++r) {
      if (d.rooms[r].room_type == d.sections[s].room_type) {
        rooms_of[s].push_back(static_cast<int>(r));
      }
    }
  }
  // Units: one per extended block, one per ordinary meeting.
  std::vector<std::pair<int, std::vector<oracle::Pair>>> units;
  for (size_t s = 0; s < slots.size(); ++s) {
    if (d.sections[s].is_extended) {
      units.push_back({static_cast<int>(s), slots[s]});
    } else {
      for (const auto& p : slots[s]) units.push_back({static_cast<int>(s), {p}});
    }
  }
  int64_t best = std::numeric_limits<int64_t>::max();
  std::map<std::tuple<int, int, int>, int> use;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == units.size()) {
      int64_t extra = 0;
      for (const auto& [key, n] : use) extra += std::max(0, n - 1);
      best = std::min(best, extra);
      return;
    }
    for (const int r : rooms_of[units[i].first]) {
      for (const auto& [day, t] : units[i].second) ++use[{day, t, r}];
      rec(i + 1);
      for (const auto& [day, t] : units[i].second) --use[{day, t, r}];
    }
  };
  rec(0);
  return best;
}

TEST(AssignRoomsTest, MatchesExhaustiveAndMatchingOracles) {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    std::mt19937_64 rng(seed);
    DataBuilder b;
    b.Grid(1, 6, std::nullopt).AddRoom("R1", "room").AddRoom("R2", "room");
    b.AddRoom("L1", "lab");
    const int n = 6;
    for (int s = 0; s < n; ++s) {
      const std::string id = std::to_string(s);
      b.AddProfessor("P" + id).AddCourse("C" + id);
      const bool ext = s >= 4;
      const bool lab = s >= 4 || rng() % 4 == 0;
      b.AddSection("s" + id, "C" + id, 1, "P" + id, lab ? "lab" : "room",
                   ext ? 2 : 1 + static_cast<int>(rng() % 2), ext);
      b.AddGroup("G" + id, 1, {"C" + id});
    }
    const InstanceData d = b.Build();
    const Instance inst = b.Make();
    SlotLists slots(n);
    for (int s = 0; s < n; ++s) {
      const auto options = oracle::Placements(d, s);
      slots[s] = options[rng() % options.size()];
    }
    const RoomAssignment r = Unwrap(AssignRooms(inst, FromSlots(slots)));
    EXPECT_THAT(CheckStructure(inst, r.timetable), IsEmpty());
    EXPECT_EQ(r.double_bookings, ExhaustiveDoubleBookings(d, slots))
        << "seed " << seed;
    // Per-slot matching deficit between meetings and rooms of their type.
    int64_t deficit = 0;
    for (int t = 0; t < 6; ++t) {
      std::vector<std::vector<int>> allowed;
      for (int s = 0; s < n; ++s) {
        for (const auto& p : slots[s]) {
          if (p.second != t) continue;
          std::vector<int> rooms;
          for (size_t k = 0; k < d.rooms.size(); ++k) {
            if (d.rooms[k].room_type == d.sections[s].room_type) {
              rooms.push_back(static_cast<int>(k));
            }
          }
          allowed.push_back(rooms);
        }
      }
      deficit += oracle::MatchingDeficit(allowed, static_cast<int>(d.rooms.size()));
    }
    EXPECT_EQ(r.lower_bound, deficit);
    EXPECT_GE(r.double_bookings, r.lower_bound);
  }
}

TEST(AssignRoomsTest, NoDoubleBookingWhenSupplySuffices) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const PlantedInstance planted = Unwrap(GeneratePlanted(seed));
    const Instance inst = Unwrap(Instance::Create(planted.data));
    const RoomAssignment r = Unwrap(AssignRooms(inst, planted.timetable));
    EXPECT_EQ(r.lower_bound, 0);
    EXPECT_EQ(r.double_bookings, 0);
    EXPECT_THAT(CheckStructure(inst, r.timetable), IsEmpty());
  }
}

TEST(PhasedSolveTest, PlantedInstancesReachZero) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const PlantedInstance planted = Unwrap(GeneratePlanted(seed));
    const Instance inst = Unwrap(Instance::Create(planted.data));
    const Sectioning f = Unwrap(GreedySection(inst, seed)).sectioning;
    const ConflictGraph g = Unwrap(ScgOf(inst, f));
    PhasedOptions options;
    options.phase_a_seconds = 0.5;
    options.phase_b_seconds = 2.0;
    options.seed = seed;
    const PhasedResult r =
        Unwrap(PhasedSolve(inst, g, inst.soft_weights(), options));
    EXPECT_EQ(r.report.total, 0.0) << "seed " << seed;
    EXPECT_TRUE(r.timetable.has_rooms());
    EXPECT_THAT(CheckStructure(inst, r.timetable), IsEmpty());
    // Phase A holds only extended sections and the common section.
    for (int s = 0; s < inst.num_sections(); ++s) {
      if (r.phase_a.placed(s)) {
        EXPECT_TRUE(inst.is_extended(s) || s == inst.common_section());
      }
    }
  }
}

}  // namespace
}  // namespace sectime
