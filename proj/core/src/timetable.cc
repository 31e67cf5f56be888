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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "json.hpp"

namespace sectime {

std::vector<int> BlockStarts(const PeriodGrid& grid, int length) {
  std::vector<int> starts;
  if (length < 2 || length > 4) return starts;
  const std::vector<int> teaching = grid.TeachingPeriods();
  if (teaching.empty()) return starts;
  const int max_t = teaching.back();
  const int span = length - 1;
  for (const int t : teaching) {
    bool ok;
    if (!grid.lunch_period.has_value()) {
      ok = t + span <= max_t;
    } else {
      const int lunch = *grid.lunch_period;
      if (length == 4) {
        ok = t + span < lunch;
      } else {
        ok = t + span < lunch || (t > lunch && t + span <= max_t);
      }
    }
    if (ok) starts.push_back(t);
  }
  return starts;
}

absl::StatusOr<std::vector<Slot>> LegalStarts(const Instance& instance,
                                              int section) {
  if (section < 0 || section >= instance.num_sections()) {
    return absl::InvalidArgumentError("section index out of range");
  }
  if (!instance.is_extended(section)) {
    return absl::InvalidArgumentError(
        absl::StrCat("section '", instance.sections()[section].id,
                     "' is not extended"));
  }
  std::vector<Slot> out;
  const std::vector<int> starts =
      BlockStarts(instance.grid(), instance.meetings(section));
  for (int d = 0; d < instance.grid().days; ++d) {
    for (const int t : starts) out.push_back({d, t});
  }
  return out;
}

bool Timetable::has_rooms() const {
  for (const auto& meetings : sections) {
    for (const Meeting& m : meetings) {
      if (m.room >= 0) return true;
    }
  }
  return false;
}

std::vector<Violation> CheckStructure(const Instance& instance,
                                      const Timetable& timetable,
                                      bool allow_unplaced) {
  std::vector<Violation> out;
  if (static_cast<int>(timetable.sections.size()) != instance.num_sections()) {
    out.push_back({"shape", {},
                   absl::StrCat("timetable has ", timetable.sections.size(),
                                " sections, instance has ",
                                instance.num_sections())});
    return out;
  }
  const PeriodGrid& grid = instance.grid();
  const bool rooms = timetable.has_rooms();
  for (int s = 0; s < instance.num_sections(); ++s) {
    const std::string& id = instance.sections()[s].id;
    const std::vector<Meeting>& ms = timetable.sections[s];
    if (ms.empty()) {
      if (!allow_unplaced) out.push_back({"unplaced", {id}, "no meetings"});
      continue;
    }
    if (static_cast<int>(ms.size()) != instance.meetings(s)) {
      out.push_back({"meeting_count", {id},
                     absl::StrCat(ms.size(), " meetings, expected ",
                                  instance.meetings(s))});
    }
    bool in_range = true;
    for (const Meeting& m : ms) {
      if (m.day < 0 || m.day >= grid.days || m.period < 0 ||
          m.period >= grid.periods_per_day) {
        out.push_back({"slot_range", {id},
                       absl::StrCat("slot (", m.day, ", ", m.period,
                                    ") outside the grid")});
        in_range = false;
      } else if (grid.IsLunch(m.period)) {
        out.push_back({"lunch", {id},
                       absl::StrCat("meets in the lunch period on day ",
                                    m.day)});
      }
    }
    for (size_t i = 1; i < ms.size(); ++i) {
      const auto a = std::make_pair(ms[i - 1].day, ms[i - 1].period);
      const auto b = std::make_pair(ms[i].day, ms[i].period);
      if (a == b) {
        out.push_back({"duplicate_slot", {id},
                       absl::StrCat("two meetings at (", b.first, ", ",
                                    b.second, ")")});
      } else if (b < a) {
        out.push_back({"order", {id}, "meetings not sorted by slot"});
      }
    }
    if (instance.is_extended(s) && in_range) {
      bool contiguous = true;
      for (size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].day != ms[0].day ||
            ms[i].period != ms[0].period + static_cast<int>(i)) {
          contiguous = false;
        }
      }
      if (!contiguous) {
        out.push_back({"contiguity", {id},
                       "extended meetings are not one same-day block"});
      } else {
        const std::vector<int> starts =
            BlockStarts(grid, static_cast<int>(ms.size()));
        if (!std::binary_search(starts.begin(), starts.end(), ms[0].period)) {
          out.push_back({"legal_start", {id},
                         absl::StrCat("block start ", ms[0].period,
                                      " is outside the lunch-legal window")});
        }
      }
    }
    if (rooms) {
      for (const Meeting& m : ms) {
        if (m.room < 0) {
          out.push_back({"room_missing", {id}, "meeting without a room"});
        } else if (m.room >= static_cast<int>(instance.rooms().size())) {
          out.push_back({"room_range", {id}, "room index out of range"});
        } else if (instance.rooms()[m.room].room_type !=
                   instance.sections()[s].room_type) {
          out.push_back({"room_type",
                         {id, instance.rooms()[m.room].id},
                         "room of the wrong room-type"});
        }
      }
      if (instance.is_extended(s)) {
        for (const Meeting& m : ms) {
          if (m.room != ms[0].room) {
            out.push_back({"room_block", {id},
                           "extended block changes rooms"});
            break;
          }
        }
      }
    }
  }
  return out;
}

double WeightedTotal(const PenaltyCounts& counts, const SoftWeights& weights) {
  return weights.clash * static_cast<double>(counts.clashes) +
         weights.clash * weights.common_multiplier *
             static_cast<double>(counts.common_clashes) +
         weights.room_overflow * static_cast<double>(counts.room_overflows) +
         weights.double_meeting * static_cast<double>(counts.double_meetings) +
         weights.prof_day_off * static_cast<double>(counts.days_off);
}

absl::StatusOr<ConflictReport> Score(const Instance& instance,
                                     const ConflictGraph& graph,
                                     const Timetable& timetable,
                                     const SoftWeights& weights) {
  const std::vector<Violation> structure =
      CheckStructure(instance, timetable, /*allow_unplaced=*/true);
  if (!structure.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "structural violation: ", FormatViolations(structure)));
  }
  if (graph.num_vertices() != instance.num_sections()) {
    return absl::InvalidArgumentError("graph does not match the instance");
  }
  const PeriodGrid& grid = instance.grid();
  ConflictReport report;

  std::vector<std::set<std::pair<int, int>>> slots(instance.num_sections());
  for (int s = 0; s < instance.num_sections(); ++s) {
    for (const Meeting& m : timetable.sections[s]) {
      slots[s].emplace(m.day, m.period);
    }
  }

  const int common = instance.common_section();
  for (const ConflictGraph::Edge& e : graph.Edges()) {
    for (const auto& [d, t] : slots[e.s]) {
      if (!slots[e.t].count({d, t})) continue;
      const bool is_common = e.s == common || e.t == common;
      report.clashes.push_back({e.s, e.t, d, t, is_common});
      if (is_common) {
        ++report.counts.common_clashes;
      } else {
        ++report.counts.clashes;
      }
    }
  }
  std::sort(report.clashes.begin(), report.clashes.end());

  std::map<std::tuple<int, int, int>, int> demand;
  for (int s = 0; s < instance.num_sections(); ++s) {
    for (const auto& [d, t] : slots[s]) {
      ++demand[{d, t, instance.room_type_of(s)}];
    }
  }
  for (const auto& [key, count] : demand) {
    const auto [d, t, rt] = key;
    const int supply = instance.room_type_size(rt);
    if (count > supply) {
      report.room_overflows.push_back({d, t, rt, count, supply});
      ++report.counts.room_overflows;
    }
  }

  for (int s = 0; s < instance.num_sections(); ++s) {
    if (instance.is_extended(s)) continue;
    std::vector<int> per_day(grid.days, 0);
    for (const auto& [d, t] : slots[s]) ++per_day[d];
    for (int d = 0; d < grid.days; ++d) {
      if (per_day[d] > 1) {
        report.double_meetings.push_back({s, d, per_day[d]});
        report.counts.double_meetings += per_day[d] - 1;
      }
    }
  }

  for (int p = 0; p < static_cast<int>(instance.professors().size()); ++p) {
    std::vector<bool> teaches(grid.days, false);
    for (const int s : instance.sections_of_professor(p)) {
      for (const auto& [d, t] : slots[s]) teaches[d] = true;
    }
    const auto& requested = instance.professors()[p].requested_day_off;
    const bool charged =
        requested.has_value()
            ? static_cast<bool>(teaches[*requested])
            : std::all_of(teaches.begin(), teaches.end(),
                          [](bool b) { return b; });
    if (charged) {
      report.day_off_professors.push_back(p);
      ++report.counts.days_off;
    }
  }

  const PenaltyCounts& c = report.counts;
  report.clash_total =
      weights.clash * static_cast<double>(c.clashes) +
      weights.clash * weights.common_multiplier *
          static_cast<double>(c.common_clashes);
  report.room_total = weights.room_overflow * static_cast<double>(c.room_overflows);
  report.double_meeting_total =
      weights.double_meeting * static_cast<double>(c.double_meetings);
  report.day_off_total = weights.prof_day_off * static_cast<double>(c.days_off);
  report.total = WeightedTotal(c, weights);
  return report;
}

TabuList ExtractTabu(const Instance& instance, const Sectioning& sectioning,
                     const ConflictReport& report) {
  std::vector<std::pair<int, int>> pairs;
  for (const ClashWitness& w : report.clashes) {
    const int c1 = instance.course_of(w.s1);
    const int c2 = instance.course_of(w.s2);
    for (int g = 0; g < sectioning.num_students(); ++g) {
      if (sectioning.SectionFor(instance, g, c1) == w.s1 &&
          sectioning.SectionFor(instance, g, c2) == w.s2) {
        pairs.emplace_back(g, w.s1);
        pairs.emplace_back(g, w.s2);
      }
    }
  }
  return TabuList(std::move(pairs));
}

std::string SerializeTimetable(const Instance& instance,
                               const Timetable& timetable) {
  std::vector<std::tuple<std::string, int, int, std::string>> rows;
  for (size_t s = 0; s < timetable.sections.size(); ++s) {
    for (const Meeting& m : timetable.sections[s]) {
      rows.emplace_back(instance.sections()[s].id, m.day, m.period,
                        m.room >= 0 ? instance.rooms()[m.room].id : "-");
    }
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [s, d, t, r] : rows) {
    absl::StrAppend(&out, s, " ", d, " ", t, " ", r, "\n");
  }
  return out;
}

absl::StatusOr<Timetable> ParseTimetable(const Instance& instance,
                                         absl::string_view text) {
  Timetable timetable(instance.num_sections());
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> f =
        absl::StrSplit(line, ' ', absl::SkipEmpty());
    int day = 0;
    int period = 0;
    if (f.size() != 4 || !absl::SimpleAtoi(f[1], &day) ||
        !absl::SimpleAtoi(f[2], &period)) {
      return absl::InvalidArgumentError(
          absl::StrCat("syntax error at line ", line_no,
                       ": expected 'section day period room'"));
    }
    const int s = instance.SectionIndex(f[0]);
    if (s < 0) {
      return absl::NotFoundError(absl::StrCat(
          "reference error at line ", line_no, ": unknown section '", f[0],
          "'"));
    }
    int room = -1;
    if (f[3] != "-") {
      room = instance.RoomIndex(f[3]);
      if (room < 0) {
        return absl::NotFoundError(absl::StrCat(
            "reference error at line ", line_no, ": unknown room '", f[3],
            "'"));
      }
    }
    timetable.sections[s].push_back({day, period, room});
  }
  for (auto& ms : timetable.sections) std::sort(ms.begin(), ms.end());
  return timetable;
}

std::string SerializeReport(const Instance& instance,
                            const ConflictReport& report) {
  using nlohmann::ordered_json;
  const auto& sections = instance.sections();
  ordered_json doc = ordered_json::object();
  doc["total"] = report.total;
  ordered_json categories = ordered_json::object();
  auto category = [](int64_t count, double penalty) {
    ordered_json c = ordered_json::object();
    c["count"] = count;
    c["penalty"] = penalty;
    return c;
  };
  categories["clash"] =
      category(report.counts.clashes + report.counts.common_clashes,
               report.clash_total);
  categories["common_clash"] = category(report.counts.common_clashes, 0.0);
  categories["common_clash"].erase("penalty");
  categories["room_overflow"] =
      category(report.counts.room_overflows, report.room_total);
  categories["double_meeting"] =
      category(report.counts.double_meetings, report.double_meeting_total);
  categories["prof_day_off"] =
      category(report.counts.days_off, report.day_off_total);
  doc["categories"] = std::move(categories);

  ordered_json clashes = ordered_json::array();
  for (const ClashWitness& w : report.clashes) {
    ordered_json c = ordered_json::object();
    c["s1"] = sections[w.s1].id;
    c["s2"] = sections[w.s2].id;
    c["day"] = w.day;
    c["period"] = w.period;
    c["common"] = w.common;
    clashes.push_back(std::move(c));
  }
  doc["clashes"] = std::move(clashes);

  ordered_json overflows = ordered_json::array();
  for (const RoomOverflow& o : report.room_overflows) {
    ordered_json c = ordered_json::object();
    c["day"] = o.day;
    c["period"] = o.period;
    c["room_type"] = instance.room_type_names()[o.room_type];
    c["demand"] = o.demand;
    c["supply"] = o.supply;
    overflows.push_back(std::move(c));
  }
  doc["room_overflows"] = std::move(overflows);

  ordered_json doubles = ordered_json::array();
  for (const DoubleMeeting& m : report.double_meetings) {
    ordered_json c = ordered_json::object();
    c["section"] = sections[m.section].id;
    c["day"] = m.day;
    c["meetings"] = m.meetings;
    doubles.push_back(std::move(c));
  }
  doc["double_meetings"] = std::move(doubles);

  ordered_json profs = ordered_json::array();
  for (const int p : report.day_off_professors) {
    profs.push_back(instance.professors()[p].id);
  }
  doc["prof_day_off"] = std::move(profs);
  return doc.dump(2) + "\n";
}

}  // namespace sectime
