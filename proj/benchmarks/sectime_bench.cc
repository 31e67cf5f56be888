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

// Wall-clock microbenchmarks of each stage on generated instances.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "sectime/conflict_graph.h"
#include "sectime/edge_minimizer.h"
#include "sectime/generator.h"
#include "sectime/greedy.h"
#include "sectime/instance.h"
#include "sectime/sectioning_model.h"
#include "sectime/timetable.h"
#include "sectime/timetable_solver.h"

namespace sectime {
namespace {

const std::vector<std::string>& Presets() {
  static const auto* presets =
      new std::vector<std::string>{"easy", "medium", "medium2", "hard"};
  return *presets;
}

template <typename T>
T OrDie(absl::StatusOr<T> value) {
  if (!value.ok()) {
    std::cerr << value.status() << "\n";
    std::abort();
  }
  return *std::move(value);
}

Instance Load(int preset) {
  GeneratorSpec spec;
  spec.preset = Presets()[preset];
  return OrDie(Instance::Create(OrDie(GenerateInstance(spec, 1))));
}

void BM_Generate(benchmark::State& state) {
  GeneratorSpec spec;
  spec.preset = Presets()[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(OrDie(GenerateInstance(spec, 1)));
  }
  state.SetLabel(spec.preset);
}
BENCHMARK(BM_Generate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(OrDie(GreedySection(inst, 1)));
  }
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_Greedy)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ScgOf(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  const Sectioning f = OrDie(GreedySection(inst, 1)).sectioning;
  for (auto _ : state) benchmark::DoNotOptimize(OrDie(ScgOf(inst, f)));
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_ScgOf)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Improve(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  const Sectioning f = OrDie(GreedySection(inst, 1)).sectioning;
  ObjectiveSpec objective;
  objective.weights = inst.edge_weights();
  ImproveOptions options;
  options.budget_seconds = 1e9;
  options.max_iterations = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OrDie(Improve(inst, f, objective, options)));
  }
  state.SetItemsProcessed(state.iterations() * options.max_iterations);
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_Improve)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BuildModel(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  ObjectiveSpec objective;
  objective.weights = inst.edge_weights();
  for (auto _ : state) benchmark::DoNotOptimize(OrDie(BuildModel(inst, objective)));
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_BuildModel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Score(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  const ConflictGraph g =
      OrDie(ScgOf(inst, OrDie(GreedySection(inst, 1)).sectioning));
  SolveOptions options;
  options.budget_seconds = 0.2;
  const Timetable tt =
      OrDie(Solve(inst, g, inst.soft_weights(), options)).timetable;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OrDie(Score(inst, g, tt, inst.soft_weights())));
  }
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_Score)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_Solve(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  const ConflictGraph g =
      OrDie(ScgOf(inst, OrDie(GreedySection(inst, 1)).sectioning));
  SolveOptions options;
  options.budget_seconds = 1e9;
  options.max_iterations = 5000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OrDie(Solve(inst, g, inst.soft_weights(), options)));
  }
  state.SetItemsProcessed(state.iterations() * options.max_iterations);
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_Solve)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AssignRooms(benchmark::State& state) {
  const Instance inst = Load(state.range(0));
  const ConflictGraph g =
      OrDie(ScgOf(inst, OrDie(GreedySection(inst, 1)).sectioning));
  SolveOptions options;
  options.budget_seconds = 0.2;
  const Timetable tt =
      OrDie(Solve(inst, g, inst.soft_weights(), options)).timetable;
  for (auto _ : state) benchmark::DoNotOptimize(OrDie(AssignRooms(inst, tt)));
  state.SetLabel(Presets()[state.range(0)]);
}
BENCHMARK(BM_AssignRooms)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sectime

BENCHMARK_MAIN();
