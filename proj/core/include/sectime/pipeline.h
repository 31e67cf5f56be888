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

// End-to-end runs: greedy sectioning, edge minimization, phased timetabling
// and the tabu feedback loop, plus the benchmark table built from them.

#ifndef SECTIME_PIPELINE_H_
#define SECTIME_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "sectime/conflict_graph.h"
#include "sectime/edge_minimizer.h"
#include "sectime/instance.h"
#include "sectime/timetable.h"

namespace sectime {

struct PipelineConfig {
  // Label used in the bench row.
  std::string instance_name = "instance";
  // Deterministic seconds for each minimization pass.
  double minimize_seconds = 100.0;
  // Deterministic seconds for each timetabling pass; a quarter goes to
  // phase A, the rest to phase B.
  double timetable_seconds = 600.0;
  int tabu_rounds = 3;
  // Objective of the first pass; tabu rounds always use kWeightedTabu.
  ObjectiveVariant objective = ObjectiveVariant::kWeighted;
  int workers = 1;
  uint64_t seed = 1;
};

absl::Status ValidatePipelineConfig(const PipelineConfig& config);

struct BenchRow {
  double minimize_seconds = 0.0;
  std::string instance;
  // Plain edge counts.
  int64_t greedy_edges = 0;
  int64_t minimized_edges = 0;
  // Weighted edge counts.
  double greedy_weighted = 0.0;
  double minimized_weighted = 0.0;
  double timetable_objective = 0.0;
  // Deterministic timetabling seconds until objective 0; negative when the
  // objective stayed positive.
  double seconds_to_zero = -1.0;

  // 100 * (greedy - minimized) / greedy, rounded to 2 decimals.
  double EdgeReduction() const;
  double WeightedReduction() const;
};

// Percentage rounded half away from zero to 2 decimals; 0 when `before` is 0.
double PercentReduction(double before, double after);

struct PipelineRound {
  // 0 is the initial pass.
  int round = 0;
  double objective_start = 0.0;
  double objective_end = 0.0;
  int64_t edges = 0;
  double weighted_edges = 0.0;
  size_t tabu_size = 0;
  // Tabu pairs still enrolled after this round's minimization.
  size_t tabu_enrolled = 0;
  PenaltyCounts counts;
  double timetable_total = 0.0;
  double timetable_seconds = 0.0;
};

struct PipelineResult {
  Sectioning greedy;
  Sectioning sectioning;
  Timetable timetable;
  ConflictReport report;
  // Every pair extracted so far, including from the final timetable, so a
  // failed run leaves the list a follow-up run would use.
  TabuList tabu;
  std::vector<PipelineRound> rounds;
  BenchRow bench;

  bool success() const { return report.clash_count() == 0; }
};

// Runs the stages in order; a failing stage aborts with its name prefixed.
// The last executed round is the result: the loop stops at zero clashes or
// after config.tabu_rounds feedback rounds.
absl::StatusOr<PipelineResult> RunPipeline(const Instance& instance,
                                           const PipelineConfig& config);

// Fixed artifact names inside an output directory.
inline constexpr char kSectioningFile[] = "sectioning.txt";
inline constexpr char kTimetableFile[] = "timetable.txt";
inline constexpr char kReportFile[] = "report.json";
inline constexpr char kTabuFile[] = "tabu.txt";
inline constexpr char kSummaryFile[] = "summary.json";
inline constexpr char kBenchRowFile[] = "bench_row.csv";
inline constexpr char kBenchTableFile[] = "bench.txt";
inline constexpr char kBenchCsvFile[] = "bench.csv";

// Per-round statistics and the bench row as JSON.
std::string SerializePipelineSummary(const PipelineResult& result);

// Writes every pipeline artifact under `dir` (created if missing).
absl::Status WritePipelineArtifacts(const Instance& instance,
                                    const PipelineResult& result,
                                    const std::string& dir);

struct BenchConfig {
  std::vector<std::string> presets = {"easy", "medium", "medium2", "hard"};
  std::vector<double> minimize_budgets = {100.0, 600.0, 1800.0};
  int repeats = 3;
  // Instance seed; repeat r runs the solvers with seed + r.
  uint64_t seed = 1;
  double timetable_seconds = 600.0;
  int tabu_rounds = 0;
  int workers = 1;
};

// One row per (budget, preset, repeat), in that nesting order.
absl::StatusOr<std::vector<BenchRow>> RunBench(const BenchConfig& config);

// Fixed-width table and CSV; both byte-deterministic.
std::string FormatBenchTable(const std::vector<BenchRow>& rows);
std::string FormatBenchCsv(const std::vector<BenchRow>& rows);

}  // namespace sectime

#endif  // SECTIME_PIPELINE_H_
