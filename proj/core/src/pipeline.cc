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

#include "sectime/pipeline.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "sectime/generator.h"
#include "sectime/greedy.h"
#include "sectime/timetable_solver.h"

namespace sectime {
namespace {

using Json = nlohmann::ordered_json;

absl::Status InStage(absl::string_view stage, const absl::Status& status) {
  return absl::Status(status.code(),
                      absl::StrCat(stage, ": ", status.message()));
}

size_t EnrolledTabu(const Instance& instance, const Sectioning& sectioning,
                    const TabuList& tabu) {
  size_t count = 0;
  for (const auto& [student, section] : tabu.pairs()) {
    if (sectioning.SectionFor(instance, student,
                              instance.course_of(section)) == section) {
      ++count;
    }
  }
  return count;
}

absl::Status WriteFile(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("cannot open ", path.string(), " for writing"));
  }
  out << text;
  out.close();
  if (!out) {
    return absl::DataLossError(absl::StrCat("short write to ", path.string()));
  }
  return absl::OkStatus();
}

std::string FormatPercent(double value) {
  return absl::StrFormat("%.2f", value);
}

std::string FormatSecondsToZero(double seconds) {
  return seconds < 0.0 ? "" : absl::StrFormat("%.2f", seconds);
}

}  // namespace

double PercentReduction(double before, double after) {
  if (before == 0.0) return 0.0;
  return std::round(10000.0 * (before - after) / before) / 100.0;
}

double BenchRow::EdgeReduction() const {
  return PercentReduction(static_cast<double>(greedy_edges),
                          static_cast<double>(minimized_edges));
}

double BenchRow::WeightedReduction() const {
  return PercentReduction(greedy_weighted, minimized_weighted);
}

absl::Status ValidatePipelineConfig(const PipelineConfig& config) {
  if (!(config.minimize_seconds > 0.0)) {
    return absl::InvalidArgumentError("minimize budget must be positive");
  }
  if (!(config.timetable_seconds > 0.0)) {
    return absl::InvalidArgumentError("timetable budget must be positive");
  }
  if (config.tabu_rounds < 0) {
    return absl::InvalidArgumentError("tabu rounds must be nonnegative");
  }
  if (config.workers < 1) {
    return absl::InvalidArgumentError("workers must be at least 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<PipelineResult> RunPipeline(const Instance& instance,
                                           const PipelineConfig& config) {
  if (absl::Status s = ValidatePipelineConfig(config); !s.ok()) {
    return InStage("config", s);
  }
  if (const std::vector<Violation> v = Validate(instance); !v.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat("validate: ", FormatViolations(v)));
  }
  PipelineResult result;
  const EdgeWeights& weights = instance.edge_weights();

  absl::StatusOr<GreedyResult> greedy = GreedySection(instance, config.seed);
  if (!greedy.ok()) return InStage("greedy", greedy.status());
  result.greedy = greedy->sectioning;
  {
    absl::StatusOr<ConflictGraph> graph = ScgOf(instance, result.greedy);
    if (!graph.ok()) return InStage("greedy", graph.status());
    result.bench.greedy_edges = EdgeCount(*graph);
    result.bench.greedy_weighted = WeightedEdgeCount(*graph, instance, weights);
  }
  result.bench.instance = config.instance_name;
  result.bench.minimize_seconds = config.minimize_seconds;

  Sectioning current = result.greedy;
  std::optional<Timetable> warm;
  double timetable_seconds = 0.0;
  for (int round = 0; round <= config.tabu_rounds; ++round) {
    const uint64_t seed = config.seed + 1000003ULL * round;
    PipelineRound stats;
    stats.round = round;

    ObjectiveSpec objective;
    objective.weights = weights;
    if (round == 0) {
      objective.variant = config.objective;
    } else {
      objective.variant = ObjectiveVariant::kWeightedTabu;
      objective.tabu = result.tabu;
    }
    stats.tabu_size = objective.tabu.size();
    ImproveOptions improve_options;
    improve_options.budget_seconds = config.minimize_seconds;
    improve_options.seed = seed;
    improve_options.workers = config.workers;
    absl::StatusOr<ImproveResult> improved =
        Improve(instance, current, objective, improve_options);
    if (!improved.ok()) return InStage("minimize", improved.status());
    current = improved->sectioning;
    stats.objective_start = improved->start_value;
    stats.objective_end = improved->value;
    stats.tabu_enrolled = EnrolledTabu(instance, current, result.tabu);

    absl::StatusOr<ConflictGraph> graph = ScgOf(instance, current);
    if (!graph.ok()) return InStage("minimize", graph.status());
    stats.edges = EdgeCount(*graph);
    stats.weighted_edges = WeightedEdgeCount(*graph, instance, weights);
    if (round == 0) {
      result.bench.minimized_edges = stats.edges;
      result.bench.minimized_weighted = stats.weighted_edges;
    }

    PhasedOptions phased_options;
    phased_options.phase_a_seconds = config.timetable_seconds / 4.0;
    phased_options.phase_b_seconds =
        config.timetable_seconds - phased_options.phase_a_seconds;
    phased_options.seed = seed;
    phased_options.workers = config.workers;
    phased_options.warm = warm;
    absl::StatusOr<PhasedResult> phased =
        PhasedSolve(instance, *graph, instance.soft_weights(), phased_options);
    if (!phased.ok()) return InStage("timetable", phased.status());
    timetable_seconds += phased->seconds;
    stats.counts = phased->report.counts;
    stats.timetable_total = phased->report.total;
    stats.timetable_seconds = phased->seconds;
    result.rounds.push_back(stats);

    result.sectioning = current;
    result.timetable = phased->timetable;
    result.report = phased->report;
    if (phased->report.total == 0.0 && result.bench.seconds_to_zero < 0.0) {
      result.bench.seconds_to_zero = timetable_seconds;
    }
    if (result.report.clash_count() == 0) break;
    result.tabu.Merge(ExtractTabu(instance, current, result.report));
    warm = phased->timetable;
  }
  result.bench.timetable_objective = result.report.total;

  // The written artifacts must stand on their own.
  if (const std::vector<Violation> v =
          ValidateSectioning(instance, result.sectioning);
      !v.empty()) {
    return absl::InternalError(
        absl::StrCat("pipeline: invalid sectioning: ", FormatViolations(v)));
  }
  absl::StatusOr<ConflictGraph> final_graph = ScgOf(instance, result.sectioning);
  if (!final_graph.ok()) return InStage("pipeline", final_graph.status());
  absl::StatusOr<ConflictReport> rescored =
      Score(instance, *final_graph, result.timetable, instance.soft_weights());
  if (!rescored.ok()) return InStage("pipeline", rescored.status());
  if (rescored->counts != result.report.counts ||
      rescored->total != result.report.total) {
    return absl::InternalError("pipeline: report disagrees with rescoring");
  }
  return result;
}

std::string SerializePipelineSummary(const PipelineResult& result) {
  Json doc = Json::object();
  const BenchRow& row = result.bench;
  Json bench = Json::object();
  bench["instance"] = row.instance;
  bench["minimize_seconds"] = row.minimize_seconds;
  bench["greedy_edges"] = row.greedy_edges;
  bench["minimized_edges"] = row.minimized_edges;
  bench["edge_reduction_pct"] = row.EdgeReduction();
  bench["greedy_weighted"] = row.greedy_weighted;
  bench["minimized_weighted"] = row.minimized_weighted;
  bench["weighted_reduction_pct"] = row.WeightedReduction();
  bench["timetable_objective"] = row.timetable_objective;
  bench["seconds_to_zero"] =
      row.seconds_to_zero < 0.0 ? Json(nullptr) : Json(row.seconds_to_zero);
  doc["bench"] = bench;
  Json rounds = Json::array();
  for (const PipelineRound& r : result.rounds) {
    Json j = Json::object();
    j["round"] = r.round;
    j["objective_start"] = r.objective_start;
    j["objective_end"] = r.objective_end;
    j["edges"] = r.edges;
    j["weighted_edges"] = r.weighted_edges;
    j["tabu_size"] = r.tabu_size;
    j["tabu_enrolled"] = r.tabu_enrolled;
    j["clashes"] = r.counts.clashes;
    j["common_clashes"] = r.counts.common_clashes;
    j["room_overflows"] = r.counts.room_overflows;
    j["double_meetings"] = r.counts.double_meetings;
    j["prof_day_off"] = r.counts.days_off;
    j["timetable_total"] = r.timetable_total;
    j["timetable_seconds"] = r.timetable_seconds;
    rounds.push_back(j);
  }
  doc["rounds"] = rounds;
  doc["success"] = result.success();
  return doc.dump(2) + "\n";
}

absl::Status WritePipelineArtifacts(const Instance& instance,
                                    const PipelineResult& result,
                                    const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", dir, ": ", ec.message()));
  }
  const std::filesystem::path root(dir);
  const std::pair<const char*, std::string> files[] = {
      {kSectioningFile, SerializeSectioning(instance, result.sectioning)},
      {kTimetableFile, SerializeTimetable(instance, result.timetable)},
      {kReportFile, SerializeReport(instance, result.report)},
      {kTabuFile, SerializeTabu(instance, result.tabu)},
      {kSummaryFile, SerializePipelineSummary(result)},
      {kBenchRowFile, FormatBenchCsv({result.bench})},
  };
  for (const auto& [name, text] : files) {
    if (absl::Status s = WriteFile(root / name, text); !s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<BenchRow>> RunBench(const BenchConfig& config) {
  if (config.repeats < 1) {
    return absl::InvalidArgumentError("repeats must be at least 1");
  }
  std::vector<BenchRow> rows;
  for (const double budget : config.minimize_budgets) {
    for (const std::string& preset : config.presets) {
      GeneratorSpec spec;
      spec.preset = preset;
      absl::StatusOr<InstanceData> data = GenerateInstance(spec, config.seed);
      if (!data.ok()) return InStage("generate", data.status());
      absl::StatusOr<Instance> instance = Instance::Create(*std::move(data));
      if (!instance.ok()) return InStage("generate", instance.status());
      for (int r = 0; r < config.repeats; ++r) {
        PipelineConfig pc;
        pc.instance_name = preset;
        pc.minimize_seconds = budget;
        pc.timetable_seconds = config.timetable_seconds;
        pc.tabu_rounds = config.tabu_rounds;
        pc.workers = config.workers;
        pc.seed = config.seed + static_cast<uint64_t>(r);
        absl::StatusOr<PipelineResult> run = RunPipeline(*instance, pc);
        if (!run.ok()) {
          return InStage(absl::StrCat("bench ", preset, " budget ", budget),
                         run.status());
        }
        rows.push_back(run->bench);
      }
    }
  }
  return rows;
}

std::string FormatBenchTable(const std::vector<BenchRow>& rows) {
  std::string out = absl::StrFormat(
      "%8s  %-10s  %12s  %12s  %8s  %12s  %12s  %8s  %12s  %10s\n", "budget",
      "instance", "greedy_edges", "min_edges", "red_%", "greedy_wtd",
      "min_wtd", "wred_%", "tt_objective", "t_to_zero");
  for (const BenchRow& r : rows) {
    absl::StrAppend(
        &out,
        absl::StrFormat("%8g  %-10s  %12d  %12d  %8s  %12.2f  %12.2f  %8s  "
                        "%12.2f  %10s\n",
                        r.minimize_seconds, r.instance, r.greedy_edges,
                        r.minimized_edges, FormatPercent(r.EdgeReduction()),
                        r.greedy_weighted, r.minimized_weighted,
                        FormatPercent(r.WeightedReduction()),
                        r.timetable_objective,
                        FormatSecondsToZero(r.seconds_to_zero)));
  }
  return out;
}

std::string FormatBenchCsv(const std::vector<BenchRow>& rows) {
  std::string out =
      "minimize_seconds,instance,greedy_edges,minimized_edges,"
      "edge_reduction_pct,greedy_weighted,minimized_weighted,"
      "weighted_reduction_pct,timetable_objective,seconds_to_zero\n";
  for (const BenchRow& r : rows) {
    absl::StrAppend(
        &out,
        absl::StrFormat("%g,%s,%d,%d,%s,%.2f,%.2f,%s,%.2f,%s\n",
                        r.minimize_seconds, r.instance, r.greedy_edges,
                        r.minimized_edges, FormatPercent(r.EdgeReduction()),
                        r.greedy_weighted, r.minimized_weighted,
                        FormatPercent(r.WeightedReduction()),
                        r.timetable_objective,
                        FormatSecondsToZero(r.seconds_to_zero)));
  }
  return out;
}

}  // namespace sectime
