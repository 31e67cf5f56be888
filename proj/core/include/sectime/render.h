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

// Static weekly grids for divisions and professors.
//
// Selectors: "division:<name>" (names from DivisionNames), "professor:<id>",
// "divisions" and "professors" (every one, in order). Text grids put periods
// in rows and days in columns. A cell lists the section ids meeting there,
// joined by " / "; later periods of an extended block show "|" instead of
// the id, and the lunch row reads "LUNCH". HTML output merges an extended
// block into one cell with rowspan.

#ifndef SECTIME_RENDER_H_
#define SECTIME_RENDER_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "sectime/conflict_graph.h"
#include "sectime/instance.h"
#include "sectime/timetable.h"

namespace sectime {

enum class RenderFormat { kText, kHtml };

absl::StatusOr<RenderFormat> ParseRenderFormat(absl::string_view name);

// One selected schedule: a title and the sections it covers.
struct ScheduleView {
  std::string title;
  std::vector<int> sections;
};

// NotFound for an unknown division or professor, InvalidArgument for a
// malformed selector.
absl::StatusOr<std::vector<ScheduleView>> SelectSchedules(
    const Instance& instance, const Sectioning& sectioning,
    absl::string_view selector);

// The cell grid of one view: cells[period][day] lists section indices in
// ascending order.
std::vector<std::vector<std::vector<int>>> ScheduleCells(
    const Instance& instance, const Timetable& timetable,
    const ScheduleView& view);

absl::StatusOr<std::string> RenderSchedule(const Instance& instance,
                                           const Sectioning& sectioning,
                                           const Timetable& timetable,
                                           absl::string_view selector,
                                           RenderFormat format);

}  // namespace sectime

#endif  // SECTIME_RENDER_H_
