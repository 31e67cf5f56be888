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

#include "sectime/generator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "sectime/conflict_graph.h"
#include "sectime/edge_minimizer.h"
#include "sectime/random.h"

namespace sectime {
namespace {

struct PresetParams {
  int index;
  int target;
  int majors;
  int min_group;
  int max_group;
  double lab_probability;
  double four_block_probability;
  double room_factor;
  int professor_load;  // max sections per professor
  int singletons;
  int retake_groups;
  double day_off_probability;
  int capacity_slack;  // max extra seats per section
};

const std::map<std::string, PresetParams>& Presets() {
  static const auto* presets = new std::map<std::string, PresetParams>{
      {"easy", {0, 256, 4, 8, 13, 0.25, 0.0, 1.35, 4, 2, 1, 0.3, 3}},
      {"medium", {1, 339, 5, 8, 14, 0.35, 0.1, 1.15, 5, 3, 2, 0.3, 2}},
      {"medium2", {2, 352, 5, 9, 14, 0.40, 0.15, 1.1, 5, 3, 2, 0.35, 2}},
      {"hard", {3, 372, 5, 9, 15, 0.45, 0.2, 1.0, 6, 4, 2, 0.4, 1}},
  };
  return *presets;
}

constexpr const char* kMajorCodes[] = {"MA", "SC", "EN", "CS", "BI",
                                       "AR", "EC", "PH"};
constexpr int kYears = 4;

struct CoursePlan {
  std::string id;
  std::string department;
  std::string room_type;
  int meetings = 1;
  bool extended = false;
  int parent = -1;  // index of the parent course (labs)
  bool common = false;
};

struct GroupPlan {
  std::string id;
  int size = 1;
  std::vector<int> courses;
};

int WeeklyMeetings(const std::vector<CoursePlan>& courses,
                   const std::vector<int>& list) {
  int total = 0;
  for (const int c : list) total += courses[c].meetings;
  return total;
}

// Meetings one room can host per week for a given block length.
int RoomWeeklyBlocks(const PeriodGrid& grid, int length) {
  // Non-overlapping blocks per day, taken greedily from the legal starts.
  int per_day = 0;
  int next_free = 0;
  for (const int t : BlockStarts(grid, length)) {
    if (t >= next_free) {
      ++per_day;
      next_free = t + length;
    }
  }
  return per_day * grid.days;
}

absl::StatusOr<InstanceData> GenerateLarge(const PresetParams& params,
                                           const GeneratorSpec& spec,
                                           uint64_t seed) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(params.index));
  const int majors = std::clamp(spec.majors.value_or(params.majors), 1, 8);
  const int target = spec.target_sections.value_or(params.target);

  InstanceData data;
  data.grid.days = 5;
  data.grid.periods_per_day = 8;
  data.grid.lunch_period = 4;
  const int teaching_slots =
      data.grid.days * static_cast<int>(data.grid.TeachingPeriods().size());

  // Courses.
  std::vector<CoursePlan> courses;
  std::vector<std::vector<int>> core(kYears + 1);
  std::vector<std::vector<std::vector<int>>> major_courses(
      majors, std::vector<std::vector<int>>(kYears + 1));
  std::vector<int> honors(kYears + 1, -1);
  std::vector<std::vector<int>> practicum(majors,
                                          std::vector<int>(kYears + 1, -1));
  for (int y = 1; y <= kYears; ++y) {
    for (int k = 1; k <= 3; ++k) {
      core[y].push_back(static_cast<int>(courses.size()));
      courses.push_back({absl::StrCat("CORE", y, k), "core", "classroom", 3});
    }
    honors[y] = static_cast<int>(courses.size());
    courses.push_back({absl::StrCat("HON", y), "core", "seminar", 2});
  }
  for (int m = 0; m < majors; ++m) {
    const std::string code = kMajorCodes[m];
    for (int y = 1; y <= kYears; ++y) {
      for (int k = 1; k <= 2; ++k) {
        const int lecture = static_cast<int>(courses.size());
        major_courses[m][y].push_back(lecture);
        courses.push_back({absl::StrCat(code, y, k), code, "classroom",
                           rng.Chance(0.3) ? 2 : 3});
        if (rng.Chance(params.lab_probability)) {
          major_courses[m][y].push_back(static_cast<int>(courses.size()));
          CoursePlan lab{absl::StrCat(code, y, k, "L"), code,
                         absl::StrCat("lab-", code), rng.Chance(0.5) ? 3 : 2,
                         true};
          lab.parent = lecture;
          courses.push_back(lab);
        }
      }
      if (y >= 3) {
        practicum[m][y] = static_cast<int>(courses.size());
        const int length = rng.Chance(params.four_block_probability) ? 4 : 3;
        courses.push_back({absl::StrCat(code, y, "P"), code,
                           m == 0 ? "gym" : "workshop", length, true});
      }
    }
  }
  const int common = static_cast<int>(courses.size());
  CoursePlan assembly{"ASSEMBLY", "core", "hall", 1};
  assembly.common = true;
  courses.push_back(assembly);

  // Major-groups.
  std::vector<GroupPlan> groups;
  auto finish_group = [&](GroupPlan g, bool optional_honors) {
    g.courses.push_back(common);
    std::sort(g.courses.begin(), g.courses.end());
    g.courses.erase(std::unique(g.courses.begin(), g.courses.end()),
                    g.courses.end());
    if (optional_honors && WeeklyMeetings(courses, g.courses) > teaching_slots) {
      g.courses.erase(std::remove_if(g.courses.begin(), g.courses.end(),
                                     [&](int c) {
                                       return courses[c].room_type == "seminar";
                                     }),
                      g.courses.end());
    }
    groups.push_back(std::move(g));
  };
  for (int y = 1; y <= kYears; ++y) {
    for (int m = 0; m < majors; ++m) {
      for (const char track : {'H', 'S'}) {
        GroupPlan g;
        g.id = absl::StrCat(y, kMajorCodes[m], std::string(1, track));
        g.size = rng.Between(params.min_group, params.max_group);
        g.courses = core[y];
        g.courses.insert(g.courses.end(), major_courses[m][y].begin(),
                         major_courses[m][y].end());
        if (track == 'H') g.courses.push_back(honors[y]);
        if (practicum[m][y] >= 0) g.courses.push_back(practicum[m][y]);
        finish_group(std::move(g), true);
      }
    }
  }
  for (int k = 1; k <= params.singletons; ++k) {
    const int y = rng.Between(1, kYears - 1);
    const int m = rng.Between(0, majors - 1);
    GroupPlan g;
    g.id = absl::StrCat("ADV", k);
    g.courses = core[y];
    g.courses.insert(g.courses.end(), major_courses[m][y + 1].begin(),
                     major_courses[m][y + 1].end());
    if (practicum[m][y + 1] >= 0) g.courses.push_back(practicum[m][y + 1]);
    finish_group(std::move(g), true);
  }
  for (int k = 1; k <= params.retake_groups; ++k) {
    const int y = rng.Between(2, kYears);
    const int m = rng.Between(0, majors - 1);
    GroupPlan g;
    g.id = absl::StrCat("RET", k);
    g.size = rng.Between(2, 4);
    g.courses = core[y];
    g.courses.push_back(rng.Pick(core[y - 1]));
    g.courses.insert(g.courses.end(), major_courses[m][y].begin(),
                     major_courses[m][y].end());
    finish_group(std::move(g), true);
  }
  int total_students = 0;
  std::vector<int> demand(courses.size(), 0);
  for (const GroupPlan& g : groups) {
    total_students += g.size;
    for (const int c : g.courses) demand[c] += g.size;
  }

  // Section counts: the per-section seat count that best hits the target.
  auto counts_for = [&](int seats) {
    std::vector<int> n(courses.size(), 0);
    for (size_t c = 0; c < courses.size(); ++c) {
      if (demand[c] == 0) continue;
      if (courses[c].common) {
        n[c] = 1;
      } else if (courses[c].parent < 0) {
        n[c] = std::max(1, (demand[c] + seats - 1) / seats);
      }
    }
    for (size_t c = 0; c < courses.size(); ++c) {
      if (courses[c].parent >= 0 && demand[c] > 0) n[c] = n[courses[c].parent];
    }
    return n;
  };
  auto total_of = [](const std::vector<int>& n) {
    int t = 0;
    for (const int x : n) t += x;
    return t;
  };
  int best_seats = 1;
  int best_gap = std::numeric_limits<int>::max();
  for (int seats = 4; seats <= 200; ++seats) {
    const int gap = std::abs(total_of(counts_for(seats)) - target);
    if (gap < best_gap) {
      best_gap = gap;
      best_seats = seats;
    }
  }
  const std::vector<int> num_sections = counts_for(best_seats);

  // Sections and professors.
  struct ProfPlan {
    std::string id;
    std::string department;
    int sections = 0;
    int meetings = 0;
  };
  std::vector<ProfPlan> profs;
  std::map<std::string, int> dept_count;
  std::vector<std::vector<int>> course_sections(courses.size());
  std::vector<int> section_prof;
  auto pick_professor = [&](const std::string& dept, int meetings) {
    int best_load = std::numeric_limits<int>::max();
    std::vector<int> ties;
    for (int p = 0; p < static_cast<int>(profs.size()); ++p) {
      if (profs[p].department != dept) continue;
      if (profs[p].sections >= params.professor_load ||
          profs[p].meetings + meetings > 20) {
        continue;
      }
      if (profs[p].sections < best_load) {
        best_load = profs[p].sections;
        ties.clear();
      }
      if (profs[p].sections == best_load) ties.push_back(p);
    }
    // Open a new post now and then even when someone is free.
    if (ties.empty() || rng.Chance(0.15)) {
      profs.push_back({absl::StrCat("P-", dept, "-", ++dept_count[dept]), dept});
      ties = {static_cast<int>(profs.size()) - 1};
    }
    const int p = rng.Pick(ties);
    ++profs[p].sections;
    profs[p].meetings += meetings;
    return p;
  };

  std::vector<int> capacity_of;
  for (size_t c = 0; c < courses.size(); ++c) {
    data.courses.push_back({courses[c].id});
  }
  for (size_t c = 0; c < courses.size(); ++c) {
    const CoursePlan& plan = courses[c];
    for (int k = 0; k < num_sections[c]; ++k) {
      Section sec;
      sec.id = absl::StrCat(plan.id, "-", k + 1);
      sec.course_id = plan.id;
      sec.room_type = plan.room_type;
      sec.meetings_per_week = plan.meetings;
      sec.is_extended = plan.extended;
      if (plan.common) {
        sec.capacity = total_students;
      } else if (plan.parent >= 0) {
        const int parent = course_sections[plan.parent][k];
        sec.parent_id = data.sections[parent].id;
        sec.capacity = data.sections[parent].capacity;
      } else {
        const int base = (demand[c] + num_sections[c] - 1) / num_sections[c];
        sec.capacity = base + rng.Between(0, params.capacity_slack);
      }
      int p;
      if (plan.parent >= 0 && rng.Chance(0.5)) {
        p = section_prof[course_sections[plan.parent][k]];
        ++profs[p].sections;
        profs[p].meetings += plan.meetings;
      } else {
        p = pick_professor(plan.department, plan.meetings);
      }
      sec.professor_id = profs[p].id;
      course_sections[c].push_back(static_cast<int>(data.sections.size()));
      section_prof.push_back(p);
      data.sections.push_back(std::move(sec));
    }
  }
  if (demand[common] > 0) {
    data.common_section_id = data.sections[course_sections[common][0]].id;
  }
  for (const ProfPlan& p : profs) {
    Professor prof{p.id, std::nullopt};
    if (rng.Chance(params.day_off_probability)) {
      prof.requested_day_off = rng.Between(0, data.grid.days - 1);
    }
    data.professors.push_back(std::move(prof));
  }

  // Rooms: enough for the weekly demand of each room-type, scaled.
  std::map<std::string, double> load;  // in room-weeks
  std::map<std::string, bool> single;
  single["gym"] = true;
  single["hall"] = true;
  for (const Section& sec : data.sections) {
    if (sec.is_extended) {
      load[sec.room_type] +=
          1.0 / RoomWeeklyBlocks(data.grid, sec.meetings_per_week);
    } else {
      load[sec.room_type] +=
          static_cast<double>(sec.meetings_per_week) / teaching_slots;
    }
  }
  for (auto& [type, weeks] : load) {
    int count;
    if (single[type] && weeks <= 0.9) {
      count = 1;
    } else {
      count = std::max(1, static_cast<int>(std::ceil(weeks * params.room_factor)));
      if (single[type] && count == 1) count = 2;
    }
    for (int k = 1; k <= count; ++k) {
      data.rooms.push_back({absl::StrCat(type, "-", k), type});
    }
  }

  for (const GroupPlan& g : groups) {
    MajorGroup mg;
    mg.id = g.id;
    mg.size = g.size;
    for (const int c : g.courses) mg.required_course_ids.push_back(courses[c].id);
    data.major_groups.push_back(std::move(mg));
  }
  return data;
}

// ---------------------------------------------------------------------------
// Tiny planted preset.

struct TinyCourse {
  std::string id;
  int sections = 2;
  int meetings = 1;
  bool extended = false;
  bool common = false;
  int parent = -1;
  std::string room_type = "room";
};

std::optional<PlantedInstance> TryTiny(Rng& rng) {
  PlantedInstance out;
  InstanceData& data = out.data;
  data.grid.days = 3;
  data.grid.periods_per_day = 5;
  data.grid.lunch_period = 2;
  const int days = data.grid.days;
  const std::vector<int> periods = data.grid.TeachingPeriods();

  std::vector<TinyCourse> courses;
  courses.push_back({"ASM", 1, 1, false, true, -1, "hall"});
  const bool family = rng.Chance(0.6);
  if (family) {
    courses.push_back({"LEC", 2, rng.Between(1, 2)});
    TinyCourse lab{"LAB", 2, 2, true};
    lab.parent = 1;
    lab.room_type = "lab";
    courses.push_back(lab);
  }
  const int others = family ? rng.Between(1, 2) : rng.Between(2, 3);
  for (int k = 0; k < others; ++k) {
    courses.push_back({absl::StrCat("C", k + 1), rng.Between(2, 3),
                       rng.Between(1, 2)});
  }
  int total_sections = 0;
  for (const TinyCourse& c : courses) total_sections += c.sections;
  while (total_sections > 12) {
    for (TinyCourse& c : courses) {
      if (c.sections == 3 && total_sections > 12) {
        c.sections = 2;
        --total_sections;
      }
    }
  }

  // Groups: the first takes everything, the optional second a subset.
  std::vector<std::pair<int, std::vector<int>>> groups;
  std::vector<int> all(courses.size());
  for (size_t c = 0; c < courses.size(); ++c) all[c] = static_cast<int>(c);
  groups.push_back({rng.Between(2, 4), all});
  if (rng.Chance(0.6)) {
    std::vector<int> subset = {0};
    for (size_t c = 1; c < courses.size(); ++c) {
      if (rng.Chance(0.5)) subset.push_back(static_cast<int>(c));
    }
    // Children need their parent course.
    for (size_t i = 0; i < subset.size(); ++i) {
      const int p = courses[subset[i]].parent;
      if (p >= 0 && std::find(subset.begin(), subset.end(), p) == subset.end()) {
        subset.push_back(p);
      }
    }
    std::sort(subset.begin(), subset.end());
    if (subset.size() == 1) subset.push_back(static_cast<int>(courses.size()) - 1);
    groups.push_back({rng.Between(1, 2), subset});
  }
  auto choice_space = [&]() {
    double product = 1.0;
    for (const auto& [size, list] : groups) {
      for (const int c : list) {
        product *= std::pow(static_cast<double>(courses[c].sections), size);
      }
    }
    return product;
  };
  while (choice_space() > 1e6) {
    auto& largest = *std::max_element(
        groups.begin(), groups.end(),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    if (largest.first <= 1) return std::nullopt;
    --largest.first;
  }
  int students = 0;
  std::vector<int> demand(courses.size(), 0);
  for (const auto& [size, list] : groups) {
    students += size;
    for (const int c : list) demand[c] += size;
  }

  // Slots: course-level patterns on disjoint slots; lab sections on distinct
  // blocks because their room-type has a single room.
  std::set<std::pair<int, int>> free;
  for (int d = 0; d < days; ++d) {
    for (const int t : periods) free.insert({d, t});
  }
  std::vector<std::vector<std::vector<std::pair<int, int>>>> slots(
      courses.size());
  for (size_t c = 0; c < courses.size(); ++c) {
    const TinyCourse& course = courses[c];
    if (course.extended) {
      std::vector<std::pair<int, int>> blocks;
      for (int d = 0; d < days; ++d) {
        for (const int t : BlockStarts(data.grid, course.meetings)) {
          bool ok = true;
          for (int i = 0; i < course.meetings; ++i) {
            if (!free.count({d, t + i})) ok = false;
          }
          if (ok) blocks.push_back({d, t});
        }
      }
      rng.Shuffle(blocks);
      if (static_cast<int>(blocks.size()) < course.sections) return std::nullopt;
      for (int k = 0; k < course.sections; ++k) {
        std::vector<std::pair<int, int>> mine;
        for (int i = 0; i < course.meetings; ++i) {
          mine.push_back({blocks[k].first, blocks[k].second + i});
        }
        for (const auto& slot : mine) {
          if (!free.count(slot)) return std::nullopt;
          free.erase(slot);
        }
        slots[c].push_back(std::move(mine));
      }
      continue;
    }
    std::vector<int> order(days);
    for (int d = 0; d < days; ++d) order[d] = d;
    rng.Shuffle(order);
    std::vector<std::pair<int, int>> pattern;
    for (const int d : order) {
      if (static_cast<int>(pattern.size()) == course.meetings) break;
      std::vector<int> options;
      for (const int t : periods) {
        if (free.count({d, t})) options.push_back(t);
      }
      if (options.empty()) continue;
      pattern.push_back({d, rng.Pick(options)});
    }
    if (static_cast<int>(pattern.size()) != course.meetings) return std::nullopt;
    std::sort(pattern.begin(), pattern.end());
    for (const auto& slot : pattern) free.erase(slot);
    for (int k = 0; k < course.sections; ++k) slots[c].push_back(pattern);
  }

  // Professors: one per section, then merges that keep slots disjoint and at
  // most two teaching days.
  std::vector<std::pair<int, int>> sections;  // (course, k)
  for (size_t c = 0; c < courses.size(); ++c) {
    for (int k = 0; k < courses[c].sections; ++k) {
      sections.push_back({static_cast<int>(c), k});
    }
  }
  const int n = static_cast<int>(sections.size());
  std::vector<int> prof(n);
  for (int s = 0; s < n; ++s) prof[s] = s;
  auto prof_slots = [&](int p) {
    std::set<std::pair<int, int>> out_slots;
    for (int s = 0; s < n; ++s) {
      if (prof[s] != p) continue;
      const auto& [c, k] = sections[s];
      for (const auto& slot : slots[c][k]) out_slots.insert(slot);
    }
    return out_slots;
  };
  for (int attempt = 0; attempt < n; ++attempt) {
    const int a = static_cast<int>(rng.Below(n));
    const int b = static_cast<int>(rng.Below(n));
    if (prof[a] == prof[b] || !rng.Chance(0.5)) continue;
    std::set<std::pair<int, int>> sa = prof_slots(prof[a]);
    const std::set<std::pair<int, int>> sb = prof_slots(prof[b]);
    bool disjoint = true;
    std::set<int> used_days;
    for (const auto& slot : sa) used_days.insert(slot.first);
    for (const auto& slot : sb) {
      if (sa.count(slot)) disjoint = false;
      used_days.insert(slot.first);
    }
    if (!disjoint || static_cast<int>(used_days.size()) > days - 1) continue;
    const int from = prof[b];
    for (int s = 0; s < n; ++s) {
      if (prof[s] == from) prof[s] = prof[a];
    }
  }
  std::map<int, int> prof_index;
  for (int s = 0; s < n; ++s) {
    if (!prof_index.count(prof[s])) {
      const int id = static_cast<int>(prof_index.size());
      prof_index[prof[s]] = id;
    }
  }
  data.professors.resize(prof_index.size());
  for (const auto& [raw, id] : prof_index) {
    data.professors[id].id = absl::StrCat("P", id + 1);
    std::set<int> taught;
    for (const auto& slot : prof_slots(raw)) taught.insert(slot.first);
    std::vector<int> off;
    for (int d = 0; d < days; ++d) {
      if (!taught.count(d)) off.push_back(d);
    }
    if (!off.empty() && rng.Chance(0.5)) {
      data.professors[id].requested_day_off = rng.Pick(off);
    }
  }

  // Entities.
  int max_shared = 1;
  for (const TinyCourse& c : courses) {
    if (!c.extended && !c.common) max_shared = std::max(max_shared, c.sections);
  }
  for (int k = 1; k <= max_shared; ++k) {
    data.rooms.push_back({absl::StrCat("R", k), "room"});
  }
  data.rooms.push_back({"HALL", "hall"});
  if (family) data.rooms.push_back({"LAB1", "lab"});

  std::vector<int> capacity(courses.size(), 0);
  for (size_t c = 0; c < courses.size(); ++c) {
    data.courses.push_back({courses[c].id});
    if (courses[c].common) {
      capacity[c] = students;
    } else if (courses[c].parent >= 0) {
      capacity[c] = -1;
    } else {
      capacity[c] = (demand[c] + courses[c].sections - 1) / courses[c].sections +
                    rng.Between(0, 1);
    }
  }
  for (size_t c = 0; c < courses.size(); ++c) {
    if (courses[c].parent >= 0) capacity[c] = capacity[courses[c].parent];
  }
  out.timetable = Timetable(n);
  for (int s = 0; s < n; ++s) {
    const auto& [c, k] = sections[s];
    const TinyCourse& course = courses[c];
    Section sec;
    sec.id = absl::StrCat(course.id, "-", k + 1);
    sec.course_id = course.id;
    sec.capacity = std::max(1, capacity[c]);
    sec.professor_id = data.professors[prof_index[prof[s]]].id;
    sec.room_type = course.room_type;
    sec.meetings_per_week = course.meetings;
    sec.is_extended = course.extended;
    if (course.parent >= 0) {
      sec.parent_id = absl::StrCat(courses[course.parent].id, "-", k + 1);
    }
    data.sections.push_back(std::move(sec));
    for (const auto& [d, t] : slots[c][k]) {
      out.timetable.sections[s].push_back({d, t, -1});
    }
    std::sort(out.timetable.sections[s].begin(),
              out.timetable.sections[s].end());
  }
  data.common_section_id = "ASM-1";
  for (size_t g = 0; g < groups.size(); ++g) {
    MajorGroup mg;
    mg.id = absl::StrCat("G", g + 1);
    mg.size = groups[g].first;
    for (const int c : groups[g].second) {
      mg.required_course_ids.push_back(courses[c].id);
    }
    data.major_groups.push_back(std::move(mg));
  }
  return out;
}

// Every pair some valid sectioning could join, plus the base edges.
ConflictGraph PotentialGraph(const Instance& instance) {
  ConflictGraph graph = BaseScg(instance);
  for (const Student& g : instance.students()) {
    std::vector<int> options;
    for (const int c : g.courses) {
      for (const int s : instance.sections_of_course(c)) options.push_back(s);
    }
    for (size_t i = 0; i < options.size(); ++i) {
      for (size_t j = i + 1; j < options.size(); ++j) {
        if (instance.course_of(options[i]) != instance.course_of(options[j])) {
          graph.AddEdge(options[i], options[j], kStudentEdge);
        }
      }
    }
  }
  return graph;
}

absl::Status CheckGenerated(const InstanceData& data) {
  absl::StatusOr<Instance> inst = Instance::Create(data);
  if (!inst.ok()) return inst.status();
  const std::vector<Violation> v = Validate(*inst);
  if (!v.empty()) {
    return absl::InternalError(absl::StrCat("generator produced an invalid ",
                                            "instance: ", FormatViolations(v)));
  }
  return absl::OkStatus();
}

}  // namespace

std::vector<std::string> PresetNames() {
  return {"easy", "medium", "medium2", "hard", "tiny"};
}

int PresetTargetSections(const std::string& preset) {
  const auto it = Presets().find(preset);
  return it == Presets().end() ? -1 : it->second.target;
}

absl::StatusOr<PlantedInstance> GeneratePlanted(uint64_t seed) {
  for (uint64_t attempt = 0; attempt < 1000; ++attempt) {
    Rng rng(seed * 0x2545F4914F6CDD1DULL + attempt);
    std::optional<PlantedInstance> planted = TryTiny(rng);
    if (!planted.has_value()) continue;
    absl::StatusOr<Instance> inst = Instance::Create(planted->data);
    if (!inst.ok() || !Validate(*inst).empty()) continue;
    if (inst->num_sections() > 12 || inst->num_students() > 6 ||
        inst->num_courses() > 5 || ChoiceSpaceSize(*inst) > 1e6) {
      continue;
    }
    absl::StatusOr<ConflictReport> report =
        Score(*inst, PotentialGraph(*inst), planted->timetable,
              inst->soft_weights());
    if (!report.ok() || report->total != 0.0) continue;
    return *std::move(planted);
  }
  return absl::InternalError("could not plant a tiny instance");
}

absl::StatusOr<InstanceData> GenerateInstance(const GeneratorSpec& spec,
                                              uint64_t seed) {
  if (spec.preset == "tiny") {
    absl::StatusOr<PlantedInstance> planted = GeneratePlanted(seed);
    if (!planted.ok()) return planted.status();
    return std::move(planted->data);
  }
  const auto it = Presets().find(spec.preset);
  if (it == Presets().end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown preset '", spec.preset,
                     "' (expected easy, medium, medium2, hard or tiny)"));
  }
  absl::StatusOr<InstanceData> data = GenerateLarge(it->second, spec, seed);
  if (!data.ok()) return data.status();
  if (absl::Status s = CheckGenerated(*data); !s.ok()) return s;
  return data;
}

}  // namespace sectime
