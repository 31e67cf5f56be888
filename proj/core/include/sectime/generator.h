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

// Synthetic instances.
//
// The easy, medium, medium2 and hard presets model a small college: majors
// times class years times an honors/standard split give the major-groups;
// core courses are shared by every major of a year; some major courses come
// as lecture plus extended lab families; upper years take an extended
// practicum; everyone attends one common section. Section capacities are
// tuned so the section count lands near 256, 339, 352 and 372.
//
// The tiny preset is small enough for exhaustive search and is built around
// a planted timetable that scores 0 under every possible sectioning.

#ifndef SECTIME_GENERATOR_H_
#define SECTIME_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sectime/instance.h"
#include "sectime/timetable.h"

namespace sectime {

struct GeneratorSpec {
  std::string preset = "easy";
  // Overrides the preset's section-count target (large presets only).
  std::optional<int> target_sections;
  // Overrides the preset's major count (large presets only).
  std::optional<int> majors;
};

// "easy", "medium", "medium2", "hard", "tiny".
std::vector<std::string> PresetNames();

// Section-count target of a large preset, or -1.
int PresetTargetSections(const std::string& preset);

// Deterministic per (spec, seed); the result always passes Validate().
// InvalidArgument for an unknown preset.
absl::StatusOr<InstanceData> GenerateInstance(const GeneratorSpec& spec,
                                              uint64_t seed);

struct PlantedInstance {
  InstanceData data;
  // Indexed like data.sections; slots only.
  Timetable timetable;
};

// The tiny preset together with its planted timetable: at most 6 students,
// 5 courses and 12 sections, a choice space of at most 1e6, and a timetable
// that has no clash with any pair of sections some student could share.
absl::StatusOr<PlantedInstance> GeneratePlanted(uint64_t seed);

}  // namespace sectime

#endif  // SECTIME_GENERATOR_H_
