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

#include "sectime/render.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace sectime {
namespace {

constexpr const char* kDayNames[] = {"Mon", "Tue", "Wed", "Thu",
                                     "Fri", "Sat", "Sun"};

std::string DayName(const PeriodGrid& grid, int day) {
  if (grid.days <= 7) return kDayNames[day];
  return absl::StrCat("D", day);
}

bool MeetsAt(const Timetable& timetable, int s, int day, int period) {
  for (const Meeting& m : timetable.sections[s]) {
    if (m.day == day && m.period == period) return true;
  }
  return false;
}

// True when the meeting continues an extended block from the period above.
bool Continues(const Instance& instance, const Timetable& timetable, int s,
               int day, int period) {
  return instance.is_extended(s) && period > 0 &&
         MeetsAt(timetable, s, day, period - 1);
}

std::string HtmlEscape(absl::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<std::string> CellTokens(
    const Instance& instance, const Timetable& timetable,
    const std::vector<int>& cell, int day, int period) {
  std::vector<std::string> tokens;
  for (const int s : cell) {
    tokens.push_back(Continues(instance, timetable, s, day, period)
                         ? "|"
                         : instance.sections()[s].id);
  }
  return tokens;
}

std::string RenderText(const Instance& instance, const Timetable& timetable,
                       const ScheduleView& view) {
  const PeriodGrid& grid = instance.grid();
  const auto cells = ScheduleCells(instance, timetable, view);
  std::vector<std::vector<std::string>> text(
      grid.periods_per_day, std::vector<std::string>(grid.days));
  size_t width = 5;  // "LUNCH"
  for (int t = 0; t < grid.periods_per_day; ++t) {
    for (int d = 0; d < grid.days; ++d) {
      text[t][d] = grid.IsLunch(t)
                       ? "LUNCH"
                       : absl::StrJoin(CellTokens(instance, timetable,
                                                  cells[t][d], d, t),
                                       " / ");
      width = std::max(width, text[t][d].size());
    }
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  const size_t label_width = 6;
  std::string out = absl::StrCat(view.title, "\n");
  std::string header = pad("period", label_width);
  std::string rule(label_width, '-');
  for (int d = 0; d < grid.days; ++d) {
    absl::StrAppend(&header, " | ", pad(DayName(grid, d), width));
    absl::StrAppend(&rule, "-+-", std::string(width, '-'));
  }
  while (!header.empty() && header.back() == ' ') header.pop_back();
  absl::StrAppend(&out, header, "\n", rule, "\n");
  for (int t = 0; t < grid.periods_per_day; ++t) {
    std::string line =
        pad(grid.IsLunch(t) ? "LUNCH" : absl::StrCat("P", t), label_width);
    for (int d = 0; d < grid.days; ++d) {
      absl::StrAppend(&line, " | ", pad(text[t][d], width));
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    absl::StrAppend(&out, line, "\n");
  }
  return out;
}

std::string RenderHtml(const Instance& instance, const Timetable& timetable,
                       const ScheduleView& view) {
  const PeriodGrid& grid = instance.grid();
  const auto cells = ScheduleCells(instance, timetable, view);
  // covered[t][d]: the cell is part of a rowspan opened above.
  std::vector<std::vector<bool>> covered(
      grid.periods_per_day, std::vector<bool>(grid.days, false));
  std::string out = absl::StrCat("<section class=\"schedule\">\n<h2>",
                                 HtmlEscape(view.title), "</h2>\n<table>\n");
  absl::StrAppend(&out, "<tr><th>period</th>");
  for (int d = 0; d < grid.days; ++d) {
    absl::StrAppend(&out, "<th>", DayName(grid, d), "</th>");
  }
  absl::StrAppend(&out, "</tr>\n");
  for (int t = 0; t < grid.periods_per_day; ++t) {
    if (grid.IsLunch(t)) {
      absl::StrAppend(&out, "<tr class=\"lunch\"><th>LUNCH</th><td colspan=\"",
                      grid.days, "\">LUNCH</td></tr>\n");
      continue;
    }
    absl::StrAppend(&out, "<tr><th>P", t, "</th>");
    for (int d = 0; d < grid.days; ++d) {
      if (covered[t][d]) continue;
      const std::vector<int>& cell = cells[t][d];
      // A lone extended section whose block is not shared opens a rowspan.
      int span = 1;
      if (cell.size() == 1 && instance.is_extended(cell[0]) &&
          !Continues(instance, timetable, cell[0], d, t)) {
        const int s = cell[0];
        while (t + span < grid.periods_per_day &&
               cells[t + span][d] == std::vector<int>{s} &&
               MeetsAt(timetable, s, d, t + span)) {
          covered[t + span][d] = true;
          ++span;
        }
      }
      std::string body = HtmlEscape(
          absl::StrJoin(CellTokens(instance, timetable, cell, d, t), " / "));
      if (span > 1) {
        absl::StrAppend(&out, "<td class=\"extended\" rowspan=\"", span, "\">",
                        body, "</td>");
      } else {
        absl::StrAppend(&out, cell.size() > 1 ? "<td class=\"clash\">" : "<td>",
                        body, "</td>");
      }
    }
    absl::StrAppend(&out, "</tr>\n");
  }
  absl::StrAppend(&out, "</table>\n</section>\n");
  return out;
}

}  // namespace

absl::StatusOr<RenderFormat> ParseRenderFormat(absl::string_view name) {
  if (name == "text" || name == "txt") return RenderFormat::kText;
  if (name == "html") return RenderFormat::kHtml;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown render format '", name, "' (expected text, html)"));
}

absl::StatusOr<std::vector<ScheduleView>> SelectSchedules(
    const Instance& instance, const Sectioning& sectioning,
    absl::string_view selector) {
  std::vector<ScheduleView> views;
  const bool all_divisions = selector == "divisions";
  const bool one_division = absl::StartsWith(selector, "division:");
  if (all_divisions || one_division) {
    absl::StatusOr<std::vector<std::vector<int>>> divisions =
        Divisions(instance, sectioning);
    if (!divisions.ok()) return divisions.status();
    const std::vector<std::string> names = DivisionNames(instance, *divisions);
    const absl::string_view wanted =
        one_division ? selector.substr(9) : absl::string_view();
    for (size_t k = 0; k < divisions->size(); ++k) {
      if (one_division && names[k] != wanted) continue;
      const std::vector<int>& members = (*divisions)[k];
      const Student& first = instance.students()[members[0]];
      ScheduleView view;
      view.title = absl::StrCat(
          "division ", names[k], " (group ",
          instance.major_groups()[first.group].id, ", ", members.size(),
          members.size() == 1 ? " student)" : " students)");
      view.sections = sectioning.Schedule(members[0]);
      views.push_back(std::move(view));
    }
    if (one_division && views.empty()) {
      return absl::NotFoundError(
          absl::StrCat("unknown division '", wanted, "'"));
    }
    return views;
  }
  const bool all_professors = selector == "professors";
  const bool one_professor = absl::StartsWith(selector, "professor:");
  if (all_professors || one_professor) {
    int only = -1;
    if (one_professor) {
      only = instance.ProfessorIndex(selector.substr(10));
      if (only < 0) {
        return absl::NotFoundError(absl::StrCat("unknown professor '",
                                                selector.substr(10), "'"));
      }
    }
    for (int p = 0; p < static_cast<int>(instance.professors().size()); ++p) {
      if (only >= 0 && p != only) continue;
      const Professor& prof = instance.professors()[p];
      ScheduleView view;
      view.title = absl::StrCat("professor ", prof.id);
      if (prof.requested_day_off.has_value()) {
        absl::StrAppend(&view.title, " (day off requested: ",
                        DayName(instance.grid(), *prof.requested_day_off), ")");
      }
      view.sections = instance.sections_of_professor(p);
      views.push_back(std::move(view));
    }
    return views;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "bad selector '", selector,
      "' (expected division:<name>, professor:<id>, divisions or professors)"));
}

std::vector<std::vector<std::vector<int>>> ScheduleCells(
    const Instance& instance, const Timetable& timetable,
    const ScheduleView& view) {
  const PeriodGrid& grid = instance.grid();
  std::vector<std::vector<std::vector<int>>> cells(
      grid.periods_per_day, std::vector<std::vector<int>>(grid.days));
  std::vector<int> sections = view.sections;
  std::sort(sections.begin(), sections.end());
  for (const int s : sections) {
    for (const Meeting& m : timetable.sections[s]) {
      cells[m.period][m.day].push_back(s);
    }
  }
  return cells;
}

absl::StatusOr<std::string> RenderSchedule(const Instance& instance,
                                           const Sectioning& sectioning,
                                           const Timetable& timetable,
                                           absl::string_view selector,
                                           RenderFormat format) {
  if (static_cast<int>(timetable.sections.size()) != instance.num_sections()) {
    return absl::InvalidArgumentError(
        "timetable does not cover the instance's sections");
  }
  if (const std::vector<Violation> v =
          CheckStructure(instance, timetable, /*allow_unplaced=*/true);
      !v.empty()) {
    return absl::InvalidArgumentError(FormatViolations(v));
  }
  absl::StatusOr<std::vector<ScheduleView>> views =
      SelectSchedules(instance, sectioning, selector);
  if (!views.ok()) return views.status();
  std::string out;
  if (format == RenderFormat::kHtml) {
    out = "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
          "<title>schedules</title>\n<style>\n"
          "table{border-collapse:collapse}td,th{border:1px solid #888;"
          "padding:2px 6px}.lunch{background:#eee}"
          ".extended{background:#def}.clash{background:#fdd}\n"
          "</style>\n</head>\n<body>\n";
  }
  for (size_t i = 0; i < views->size(); ++i) {
    if (format == RenderFormat::kHtml) {
      absl::StrAppend(&out, RenderHtml(instance, timetable, (*views)[i]));
    } else {
      if (i > 0) absl::StrAppend(&out, "\n");
      absl::StrAppend(&out, RenderText(instance, timetable, (*views)[i]));
    }
  }
  if (format == RenderFormat::kHtml) absl::StrAppend(&out, "</body>\n</html>\n");
  return out;
}

}  // namespace sectime
