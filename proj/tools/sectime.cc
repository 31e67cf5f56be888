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

// sectime: command-line front end.
//
// Exit status: 0 on success, 1 on a usage, input or stage error, 2 when the
// command ran but its result is negative (violations found, clashes left,
// infeasible imported assignment).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "sectime/conflict_graph.h"
#include "sectime/edge_minimizer.h"
#include "sectime/generator.h"
#include "sectime/greedy.h"
#include "sectime/instance.h"
#include "sectime/pipeline.h"
#include "sectime/render.h"
#include "sectime/sectioning_model.h"
#include "sectime/timetable.h"
#include "sectime/timetable_solver.h"

namespace sectime {
namespace {

constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

constexpr char kInstanceFile[] = "instance.json";
constexpr char kPlantedFile[] = "planted_timetable.txt";
constexpr char kTraceFile[] = "greedy_trace.json";
constexpr char kMinimizeLogFile[] = "minimize.json";
constexpr char kPhaseAFile[] = "phase_a.txt";
constexpr char kVariableMapFile[] = "variables.map";
constexpr char kImportFile[] = "import.json";
constexpr char kEdgeListFile[] = "edges.txt";

struct Flags {
  std::string preset = "easy";
  uint64_t seed = 1;
  std::optional<int> target_sections;
  double budget_minimize = 100.0;
  double budget_timetable = 600.0;
  int tabu_rounds = 3;
  int workers = 1;
  std::string objective = "weighted";
  std::string out = "out";
  std::string instance;
  std::string sectioning;
  std::string timetable;
  std::string tabu;
  std::string solution;
  std::string format;
  std::string select = "divisions";
  int64_t iterations = -1;
  bool trace = false;
  std::vector<std::string> bench_presets;
  std::vector<double> bench_budgets;
  int repeats = 3;
  int bench_tabu_rounds = 0;
};

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteOut(const Flags& flags, const std::string& name,
                      const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(flags.out, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", flags.out, ": ", ec.message()));
  }
  const std::filesystem::path path = std::filesystem::path(flags.out) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(absl::StrCat("cannot write ", path.string()));
  }
  out << text;
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("short write ", path.string()));
}

int Fail(const absl::Status& status) {
  std::cerr << "sectime: " << status << "\n";
  return kExitError;
}

// The instance from --instance, else generated from --preset and --seed.
absl::StatusOr<Instance> LoadInstance(const Flags& flags) {
  if (!flags.instance.empty()) {
    absl::StatusOr<std::string> text = ReadFile(flags.instance);
    if (!text.ok()) return text.status();
    return ParseInstance(*text);
  }
  GeneratorSpec spec;
  spec.preset = flags.preset;
  spec.target_sections = flags.target_sections;
  absl::StatusOr<InstanceData> data = GenerateInstance(spec, flags.seed);
  if (!data.ok()) return data.status();
  return Instance::Create(*std::move(data));
}

absl::StatusOr<Sectioning> LoadSectioning(const Flags& flags,
                                          const Instance& instance) {
  if (flags.sectioning.empty()) {
    return absl::InvalidArgumentError("--sectioning is required");
  }
  absl::StatusOr<std::string> text = ReadFile(flags.sectioning);
  if (!text.ok()) return text.status();
  return ParseSectioning(instance, *text);
}

absl::StatusOr<Timetable> LoadTimetable(const Flags& flags,
                                        const Instance& instance) {
  if (flags.timetable.empty()) {
    return absl::InvalidArgumentError("--timetable is required");
  }
  absl::StatusOr<std::string> text = ReadFile(flags.timetable);
  if (!text.ok()) return text.status();
  return ParseTimetable(instance, *text);
}

absl::StatusOr<ObjectiveSpec> LoadObjective(const Flags& flags,
                                            const Instance& instance) {
  ObjectiveSpec objective;
  absl::StatusOr<ObjectiveVariant> variant =
      ParseObjectiveVariant(flags.objective);
  if (!variant.ok()) return variant.status();
  objective.variant = *variant;
  objective.weights = instance.edge_weights();
  if (!flags.tabu.empty()) {
    absl::StatusOr<std::string> text = ReadFile(flags.tabu);
    if (!text.ok()) return text.status();
    absl::StatusOr<TabuList> tabu = ParseTabu(instance, *text);
    if (!tabu.ok()) return tabu.status();
    objective.tabu = *std::move(tabu);
  }
  if (absl::Status s = ValidateObjective(instance, objective); !s.ok()) {
    return s;
  }
  return objective;
}

int RunGenerate(const Flags& flags) {
  GeneratorSpec spec;
  spec.preset = flags.preset;
  spec.target_sections = flags.target_sections;
  if (flags.preset == "tiny") {
    absl::StatusOr<PlantedInstance> planted = GeneratePlanted(flags.seed);
    if (!planted.ok()) return Fail(planted.status());
    absl::StatusOr<Instance> instance = Instance::Create(planted->data);
    if (!instance.ok()) return Fail(instance.status());
    if (absl::Status s =
            WriteOut(flags, kInstanceFile, SerializeInstance(planted->data));
        !s.ok()) {
      return Fail(s);
    }
    if (absl::Status s = WriteOut(flags, kPlantedFile,
                                  SerializeTimetable(*instance,
                                                     planted->timetable));
        !s.ok()) {
      return Fail(s);
    }
    std::cout << "tiny instance: " << instance->num_sections()
              << " sections, " << instance->num_students() << " students\n";
    return 0;
  }
  absl::StatusOr<InstanceData> data = GenerateInstance(spec, flags.seed);
  if (!data.ok()) return Fail(data.status());
  if (absl::Status s = WriteOut(flags, kInstanceFile, SerializeInstance(*data));
      !s.ok()) {
    return Fail(s);
  }
  std::cout << flags.preset << " instance: " << data->sections.size()
            << " sections\n";
  return 0;
}

int RunValidate(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  std::vector<Violation> violations = Validate(*instance);
  std::optional<Sectioning> sectioning;
  if (!flags.sectioning.empty()) {
    absl::StatusOr<Sectioning> loaded = LoadSectioning(flags, *instance);
    if (!loaded.ok()) return Fail(loaded.status());
    sectioning = *std::move(loaded);
    for (Violation& v : ValidateSectioning(*instance, *sectioning)) {
      violations.push_back(std::move(v));
    }
  }
  if (!flags.timetable.empty()) {
    absl::StatusOr<Timetable> timetable = LoadTimetable(flags, *instance);
    if (!timetable.ok()) return Fail(timetable.status());
    for (Violation& v : CheckStructure(*instance, *timetable)) {
      violations.push_back(std::move(v));
    }
    if (violations.empty() && sectioning.has_value()) {
      absl::StatusOr<ConflictGraph> graph = ScgOf(*instance, *sectioning);
      if (!graph.ok()) return Fail(graph.status());
      absl::StatusOr<ConflictReport> report =
          Score(*instance, *graph, *timetable, instance->soft_weights());
      if (!report.ok()) return Fail(report.status());
      std::cout << "score " << report->total << " clashes "
                << report->clash_count() << "\n";
    }
  }
  if (violations.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << FormatViolations(violations) << "\n";
  return kExitNegative;
}

int RunSection(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<GreedyResult> greedy = GreedySection(*instance, flags.seed);
  if (!greedy.ok()) return Fail(greedy.status());
  if (absl::Status s = WriteOut(
          flags, kSectioningFile,
          SerializeSectioning(*instance, greedy->sectioning));
      !s.ok()) {
    return Fail(s);
  }
  if (flags.trace) {
    if (absl::Status s = WriteOut(flags, kTraceFile,
                                  SerializeGreedyTrace(*instance,
                                                       greedy->trace));
        !s.ok()) {
      return Fail(s);
    }
  }
  absl::StatusOr<ConflictGraph> graph = ScgOf(*instance, greedy->sectioning);
  if (!graph.ok()) return Fail(graph.status());
  if (flags.trace) {
    if (absl::Status s =
            WriteOut(flags, kEdgeListFile, SerializeEdgeList(*instance, *graph));
        !s.ok()) {
      return Fail(s);
    }
  }
  std::cout << "edges " << EdgeCount(*graph) << " weighted "
            << WeightedEdgeCount(*graph, *instance, instance->edge_weights())
            << "\n";
  return 0;
}

int RunMinimize(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<ObjectiveSpec> objective = LoadObjective(flags, *instance);
  if (!objective.ok()) return Fail(objective.status());
  Sectioning start;
  if (flags.sectioning.empty()) {
    absl::StatusOr<GreedyResult> greedy = GreedySection(*instance, flags.seed);
    if (!greedy.ok()) return Fail(greedy.status());
    start = greedy->sectioning;
  } else {
    absl::StatusOr<Sectioning> loaded = LoadSectioning(flags, *instance);
    if (!loaded.ok()) return Fail(loaded.status());
    start = *std::move(loaded);
  }
  ImproveOptions options;
  options.budget_seconds = flags.budget_minimize;
  options.max_iterations = flags.iterations;
  options.seed = flags.seed;
  options.workers = flags.workers;
  absl::StatusOr<ImproveResult> improved =
      Improve(*instance, start, *objective, options);
  if (!improved.ok()) return Fail(improved.status());
  nlohmann::ordered_json log = nlohmann::ordered_json::object();
  log["objective"] = std::string(ObjectiveVariantName(objective->variant));
  log["start_value"] = improved->start_value;
  log["value"] = improved->value;
  log["iterations"] = improved->iterations;
  log["seconds"] = improved->seconds;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const ImproveLogEntry& e : improved->log) {
    entries.push_back({{"iteration", e.iteration},
                       {"seconds", e.seconds},
                       {"value", e.value}});
  }
  log["log"] = entries;
  if (absl::Status s = WriteOut(
          flags, kSectioningFile,
          SerializeSectioning(*instance, improved->sectioning));
      !s.ok()) {
    return Fail(s);
  }
  if (absl::Status s = WriteOut(flags, kMinimizeLogFile, log.dump(2) + "\n");
      !s.ok()) {
    return Fail(s);
  }
  std::cout << ObjectiveVariantName(objective->variant) << " "
            << improved->start_value << " -> " << improved->value << "\n";
  return 0;
}

int RunTimetable(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<Sectioning> sectioning = LoadSectioning(flags, *instance);
  if (!sectioning.ok()) return Fail(sectioning.status());
  absl::StatusOr<ConflictGraph> graph = ScgOf(*instance, *sectioning);
  if (!graph.ok()) return Fail(graph.status());
  PhasedOptions options;
  options.phase_a_seconds = flags.budget_timetable / 4.0;
  options.phase_b_seconds = flags.budget_timetable - options.phase_a_seconds;
  options.seed = flags.seed;
  options.workers = flags.workers;
  if (!flags.timetable.empty()) {
    absl::StatusOr<Timetable> warm = LoadTimetable(flags, *instance);
    if (!warm.ok()) return Fail(warm.status());
    options.warm = *std::move(warm);
  }
  absl::StatusOr<PhasedResult> result =
      PhasedSolve(*instance, *graph, instance->soft_weights(), options);
  if (!result.ok()) return Fail(result.status());
  const std::pair<const char*, std::string> files[] = {
      {kPhaseAFile, SerializeTimetable(*instance, result->phase_a)},
      {kTimetableFile, SerializeTimetable(*instance, result->timetable)},
      {kReportFile, SerializeReport(*instance, result->report)},
  };
  for (const auto& [name, text] : files) {
    if (absl::Status s = WriteOut(flags, name, text); !s.ok()) return Fail(s);
  }
  std::cout << "score " << result->report.total << " clashes "
            << result->report.clash_count() << "\n";
  return 0;
}

int RunPipelineVerb(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<ObjectiveVariant> variant =
      ParseObjectiveVariant(flags.objective);
  if (!variant.ok()) return Fail(variant.status());
  PipelineConfig config;
  config.instance_name =
      flags.instance.empty()
          ? flags.preset
          : std::filesystem::path(flags.instance).stem().string();
  config.minimize_seconds = flags.budget_minimize;
  config.timetable_seconds = flags.budget_timetable;
  config.tabu_rounds = flags.tabu_rounds;
  config.objective = *variant;
  config.workers = flags.workers;
  config.seed = flags.seed;
  absl::StatusOr<PipelineResult> result = RunPipeline(*instance, config);
  if (!result.ok()) return Fail(result.status());
  if (absl::Status s = WritePipelineArtifacts(*instance, *result, flags.out);
      !s.ok()) {
    return Fail(s);
  }
  std::cout << FormatBenchTable({result->bench});
  std::cout << "rounds " << result->rounds.size() << " clashes "
            << result->report.clash_count() << " score "
            << result->report.total << "\n";
  return result->success() ? 0 : kExitNegative;
}

int RunBenchVerb(const Flags& flags) {
  BenchConfig config;
  if (!flags.bench_presets.empty()) config.presets = flags.bench_presets;
  if (!flags.bench_budgets.empty()) config.minimize_budgets = flags.bench_budgets;
  config.repeats = flags.repeats;
  config.seed = flags.seed;
  config.timetable_seconds = flags.budget_timetable;
  config.tabu_rounds = flags.bench_tabu_rounds;
  config.workers = flags.workers;
  absl::StatusOr<std::vector<BenchRow>> rows = RunBench(config);
  if (!rows.ok()) return Fail(rows.status());
  const std::string table = FormatBenchTable(*rows);
  if (absl::Status s = WriteOut(flags, kBenchTableFile, table); !s.ok()) {
    return Fail(s);
  }
  if (absl::Status s = WriteOut(flags, kBenchCsvFile, FormatBenchCsv(*rows));
      !s.ok()) {
    return Fail(s);
  }
  std::cout << table;
  return 0;
}

int RunRender(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<Sectioning> sectioning = LoadSectioning(flags, *instance);
  if (!sectioning.ok()) return Fail(sectioning.status());
  absl::StatusOr<Timetable> timetable = LoadTimetable(flags, *instance);
  if (!timetable.ok()) return Fail(timetable.status());
  absl::StatusOr<RenderFormat> format =
      ParseRenderFormat(flags.format.empty() ? "text" : flags.format);
  if (!format.ok()) return Fail(format.status());
  absl::StatusOr<std::string> text = RenderSchedule(
      *instance, *sectioning, *timetable, flags.select, *format);
  if (!text.ok()) return Fail(text.status());
  const char* name =
      *format == RenderFormat::kHtml ? "schedule.html" : "schedule.txt";
  if (absl::Status s = WriteOut(flags, name, *text); !s.ok()) return Fail(s);
  if (*format == RenderFormat::kText) std::cout << *text;
  return 0;
}

int RunExportModel(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<ObjectiveSpec> objective = LoadObjective(flags, *instance);
  if (!objective.ok()) return Fail(objective.status());
  absl::StatusOr<ModelFormat> format =
      ParseModelFormat(flags.format.empty() ? "opb" : flags.format);
  if (!format.ok()) return Fail(format.status());
  absl::StatusOr<SectioningModel> model = BuildModel(*instance, *objective);
  if (!model.ok()) return Fail(model.status());
  absl::StatusOr<ExportedModel> exported =
      ExportModel(*model, *instance, *format);
  if (!exported.ok()) return Fail(exported.status());
  const char* name =
      *format == ModelFormat::kPseudoBoolean ? "model.opb" : "model.wcnf";
  if (absl::Status s = WriteOut(flags, name, exported->model); !s.ok()) {
    return Fail(s);
  }
  if (absl::Status s =
          WriteOut(flags, kVariableMapFile, exported->variable_map);
      !s.ok()) {
    return Fail(s);
  }
  std::cout << "variables " << model->num_vars() << " rows "
            << model->num_rows() << "\n";
  return 0;
}

int RunImportSolution(const Flags& flags) {
  absl::StatusOr<Instance> instance = LoadInstance(flags);
  if (!instance.ok()) return Fail(instance.status());
  absl::StatusOr<ObjectiveSpec> objective = LoadObjective(flags, *instance);
  if (!objective.ok()) return Fail(objective.status());
  if (flags.solution.empty()) {
    return Fail(absl::InvalidArgumentError("--solution is required"));
  }
  absl::StatusOr<std::string> text = ReadFile(flags.solution);
  if (!text.ok()) return Fail(text.status());
  absl::StatusOr<SectioningModel> model = BuildModel(*instance, *objective);
  if (!model.ok()) return Fail(model.status());
  absl::StatusOr<ImportResult> imported =
      ImportSolution(*model, *instance, *text);
  if (!imported.ok()) return Fail(imported.status());
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["feasible"] = imported->sectioning.has_value();
  doc["objective"] = imported->objective;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : imported->violations) {
    violations.push_back(
        {{"rule", v.rule}, {"ids", v.ids}, {"detail", v.detail}});
  }
  doc["violations"] = violations;
  if (absl::Status s = WriteOut(flags, kImportFile, doc.dump(2) + "\n");
      !s.ok()) {
    return Fail(s);
  }
  if (!imported->sectioning.has_value()) {
    std::cout << FormatViolations(imported->violations) << "\n";
    return kExitNegative;
  }
  if (absl::Status s = WriteOut(
          flags, kSectioningFile,
          SerializeSectioning(*instance, *imported->sectioning));
      !s.ok()) {
    return Fail(s);
  }
  std::cout << "objective " << imported->objective << "\n";
  return 0;
}

void AddInstanceFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--instance", f.instance, "Instance document (JSON)");
  cmd->add_option("--preset", f.preset,
                  "Generate easy, medium, medium2, hard or tiny instead");
  cmd->add_option("--target-sections", f.target_sections,
                  "Override the preset's section count");
}

void AddCommonFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "Seed for generation and search");
  cmd->add_option("--out", f.out, "Output directory");
}

}  // namespace
}  // namespace sectime

int main(int argc, char** argv) {
  using sectime::Flags;
  Flags f;
  CLI::App app{"Student sectioning and timetabling"};
  app.require_subcommand(1);

  CLI::App* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("--preset", f.preset, "easy, medium, medium2, hard, tiny");
  generate->add_option("--target-sections", f.target_sections,
                       "Override the preset's section count");
  sectime::AddCommonFlags(generate, f);

  CLI::App* validate = app.add_subcommand(
      "validate", "Check an instance, and optionally a sectioning/timetable");
  sectime::AddInstanceFlags(validate, f);
  sectime::AddCommonFlags(validate, f);
  validate->add_option("--sectioning", f.sectioning, "Sectioning document");
  validate->add_option("--timetable", f.timetable, "Timetable document");

  CLI::App* section = app.add_subcommand("section", "Greedy sectioning");
  sectime::AddInstanceFlags(section, f);
  sectime::AddCommonFlags(section, f);
  section->add_flag("--trace", f.trace, "Also write the greedy trace and edges");

  CLI::App* minimize =
      app.add_subcommand("minimize", "Improve a sectioning by local search");
  sectime::AddInstanceFlags(minimize, f);
  sectime::AddCommonFlags(minimize, f);
  minimize->add_option("--sectioning", f.sectioning,
                       "Start sectioning (default: greedy)");
  minimize->add_option("--objective", f.objective,
                       "edges, weighted or weighted-tabu");
  minimize->add_option("--tabu", f.tabu, "Tabu list document");
  minimize->add_option("--budget-minimize", f.budget_minimize,
                       "Deterministic seconds");
  minimize->add_option("--iterations", f.iterations, "Iteration cap");
  minimize->add_option("--workers", f.workers, "Portfolio workers");

  CLI::App* timetable =
      app.add_subcommand("timetable", "Phased timetabling of a sectioning");
  sectime::AddInstanceFlags(timetable, f);
  sectime::AddCommonFlags(timetable, f);
  timetable->add_option("--sectioning", f.sectioning, "Sectioning document")
      ->required();
  timetable->add_option("--timetable", f.timetable, "Warm-start timetable");
  timetable->add_option("--budget-timetable", f.budget_timetable,
                        "Deterministic seconds");
  timetable->add_option("--workers", f.workers, "Portfolio workers");

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "Greedy, minimize, timetable and tabu rounds");
  sectime::AddInstanceFlags(pipeline, f);
  sectime::AddCommonFlags(pipeline, f);
  pipeline->add_option("--budget-minimize", f.budget_minimize,
                       "Deterministic seconds per minimization");
  pipeline->add_option("--budget-timetable", f.budget_timetable,
                       "Deterministic seconds per timetabling pass");
  pipeline->add_option("--tabu-rounds", f.tabu_rounds, "Feedback rounds");
  pipeline->add_option("--objective", f.objective,
                       "edges, weighted or weighted-tabu");
  pipeline->add_option("--workers", f.workers, "Portfolio workers");

  CLI::App* bench = app.add_subcommand("bench", "Edge-reduction table");
  sectime::AddCommonFlags(bench, f);
  bench->add_option("--preset", f.bench_presets, "Presets (repeatable)");
  bench->add_option("--budget-minimize", f.bench_budgets,
                    "Minimization budgets (repeatable)");
  bench->add_option("--repeats", f.repeats, "Runs per (budget, preset)");
  bench->add_option("--budget-timetable", f.budget_timetable,
                    "Deterministic seconds per timetabling pass");
  bench->add_option("--tabu-rounds", f.bench_tabu_rounds, "Feedback rounds");
  bench->add_option("--workers", f.workers, "Portfolio workers");

  CLI::App* render = app.add_subcommand("render", "Weekly schedule grids");
  sectime::AddInstanceFlags(render, f);
  sectime::AddCommonFlags(render, f);
  render->add_option("--sectioning", f.sectioning, "Sectioning document")
      ->required();
  render->add_option("--timetable", f.timetable, "Timetable document")
      ->required();
  render->add_option("--select", f.select,
                     "division:<name>, professor:<id>, divisions, professors");
  render->add_option("--format", f.format, "text or html");

  CLI::App* export_model =
      app.add_subcommand("export-model", "Write the boolean sectioning model");
  sectime::AddInstanceFlags(export_model, f);
  sectime::AddCommonFlags(export_model, f);
  export_model->add_option("--objective", f.objective,
                           "edges, weighted or weighted-tabu");
  export_model->add_option("--tabu", f.tabu, "Tabu list document");
  export_model->add_option("--format", f.format, "opb or wcnf");

  CLI::App* import_solution = app.add_subcommand(
      "import-solution", "Read a solver assignment back as a sectioning");
  sectime::AddInstanceFlags(import_solution, f);
  sectime::AddCommonFlags(import_solution, f);
  import_solution->add_option("--objective", f.objective,
                              "edges, weighted or weighted-tabu");
  import_solution->add_option("--tabu", f.tabu, "Tabu list document");
  import_solution->add_option("--solution", f.solution, "Solver output")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (f.workers < 1) {
    std::cerr << "sectime: --workers must be at least 1\n";
    return sectime::kExitError;
  }
  if (*generate) return sectime::RunGenerate(f);
  if (*validate) return sectime::RunValidate(f);
  if (*section) return sectime::RunSection(f);
  if (*minimize) return sectime::RunMinimize(f);
  if (*timetable) return sectime::RunTimetable(f);
  if (*pipeline) return sectime::RunPipelineVerb(f);
  if (*bench) return sectime::RunBenchVerb(f);
  if (*render) return sectime::RunRender(f);
  if (*export_model) return sectime::RunExportModel(f);
  if (*import_solution) return sectime::RunImportSolution(f);
  return sectime::kExitError;
}
