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

#include "sectime/greedy.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "sectime/random.h"

namespace sectime {

int StudentDistance(const Student& a, const Student& b) {
  // Course lists are sorted.
  int common = 0;
  auto i = a.courses.begin();
  auto j = b.courses.begin();
  while (i != a.courses.end() && j != b.courses.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<int>(a.courses.size() + b.courses.size()) - 2 * common;
}

namespace {

constexpr size_t kMaxFamilyCombinations = 64;

class GreedyChain {
 public:
  GreedyChain(const Instance& instance, uint64_t seed)
      : inst_(instance),
        n_(instance.num_sections()),
        rng_(seed),
        sectioning_(instance),
        adj_(static_cast<size_t>(n_) * n_, 0),
        load_(n_, 0) {
    const ConflictGraph base = BaseScg(instance);
    for (const ConflictGraph::Edge& e : base.Edges()) {
      adj_[Key(e.s, e.t)] = adj_[Key(e.t, e.s)] = 1;
    }
    edges_ = base.num_edges();
  }

  absl::StatusOr<GreedyResult> Run() {
    const auto& students = inst_.students();
    const int num_students = inst_.num_students();
    GreedyTrace trace;
    if (num_students == 0) return GreedyResult{sectioning_, trace};

    // Students of a group share their course set, so distances are per group.
    const int num_groups = static_cast<int>(inst_.major_groups().size());
    std::vector<int> group_distance(num_groups * num_groups, 0);
    std::vector<Student> probes;
    for (int m = 0; m < num_groups; ++m) {
      probes.push_back(Student{"", m, inst_.group_courses(m)});
    }
    for (int a = 0; a < num_groups; ++a) {
      for (int b = 0; b < num_groups; ++b) {
        group_distance[a * num_groups + b] =
            StudentDistance(probes[a], probes[b]);
      }
    }

    std::vector<int> unenrolled(num_students);
    for (int g = 0; g < num_students; ++g) unenrolled[g] = g;

    int previous = -1;
    while (!unenrolled.empty()) {
      size_t pick;
      if (previous < 0) {
        pick = rng_.Below(unenrolled.size());
      } else {
        const int pg = students[previous].group;
        int best = std::numeric_limits<int>::max();
        std::vector<size_t> ties;
        for (size_t i = 0; i < unenrolled.size(); ++i) {
          const int d =
              group_distance[students[unenrolled[i]].group * num_groups + pg];
          if (d < best) {
            best = d;
            ties.clear();
          }
          if (d == best) ties.push_back(i);
        }
        pick = rng_.Pick(ties);
      }
      const int h = unenrolled[pick];
      unenrolled[pick] = unenrolled.back();
      unenrolled.pop_back();

      int copied = 0;
      int fresh = 0;
      absl::Status status = Enroll(h, previous, &copied, &fresh);
      if (!status.ok() && previous >= 0) {
        Release(h);
        trace.copy_fallbacks.push_back(h);
        copied = fresh = 0;
        status = Enroll(h, -1, &copied, &fresh);
      }
      if (!status.ok()) return status;
      trace.visit_order.push_back(h);
      trace.copied.push_back(copied);
      trace.fresh.push_back(fresh);
      trace.running_edges.push_back(edges_);
      previous = h;
    }
    const std::vector<Violation> violations =
        ValidateSectioning(inst_, sectioning_);
    if (!violations.empty()) {
      return absl::InternalError(absl::StrCat(
          "greedy produced an invalid sectioning: ",
          FormatViolations(violations)));
    }
    return GreedyResult{std::move(sectioning_), std::move(trace)};
  }

 private:
  size_t Key(int s, int t) const { return static_cast<size_t>(s) * n_ + t; }
  bool Open(int s) const { return load_[s] < inst_.capacity(s); }

  int Held(int h, int course) const {
    return sectioning_.SectionFor(inst_, h, course);
  }
  bool Needs(int h, int course) const {
    const auto& cs = inst_.students()[h].courses;
    return std::binary_search(cs.begin(), cs.end(), course);
  }
  bool NeedsUnassigned(int h, int course) const {
    return Needs(h, course) && Held(h, course) < 0;
  }

  void Add(int h, int s) {
    for (const int v : sectioning_.row(h)) {
      if (v < 0) continue;
      uint8_t& e = adj_[Key(s, v)];
      if (e == 0) {
        e = adj_[Key(v, s)] = 1;
        ++edges_;
      }
    }
    sectioning_.Assign(inst_, h, inst_.course_of(s), s);
    ++load_[s];
  }

  // Undoes the enrollment of h. Edges already added stay: the graph is only
  // used to price later choices and a fallback is rare.
  void Release(int h) {
    for (size_t k = 0; k < sectioning_.row(h).size(); ++k) {
      const int s = sectioning_.at(h, k);
      if (s >= 0) {
        --load_[s];
        sectioning_.set(h, k, -1);
      }
    }
  }

  // New edges the unit would add on top of h's current schedule.
  int NewEdges(int h, const std::vector<int>& unit) const {
    int count = 0;
    for (size_t i = 0; i < unit.size(); ++i) {
      const int u = unit[i];
      for (const int v : sectioning_.row(h)) {
        if (v >= 0 && adj_[Key(u, v)] == 0) ++count;
      }
      for (size_t j = 0; j < i; ++j) {
        if (adj_[Key(u, unit[j])] == 0) ++count;
      }
    }
    return count;
  }

  // Admissible ways for h to take course c: a single section, or a family
  // (parent plus the children h also needs) when the parent is not held yet.
  std::vector<std::vector<int>> Units(int h, int c) const {
    std::vector<std::vector<int>> units;
    for (const int s : inst_.sections_of_course(c)) {
      if (!Open(s)) continue;
      const int p = inst_.parent_of(s);
      std::vector<int> base;
      int root = -1;
      if (p >= 0) {
        const int pc = inst_.course_of(p);
        if (Held(h, pc) == p) {
          base = {s};
        } else if (NeedsUnassigned(h, pc) && Open(p)) {
          base = {p, s};
          root = p;
        } else {
          continue;
        }
      } else {
        base = {s};
        root = s;
      }
      if (root < 0 || inst_.children_of(root).empty()) {
        units.push_back(std::move(base));
        continue;
      }
      // Children of the root in other courses h still needs. Each such course
      // either takes one of these children or must keep another admissible
      // section available once the root is held.
      std::vector<int> child_courses;
      for (const int child : inst_.children_of(root)) {
        const int b = inst_.course_of(child);
        if (b == c || !NeedsUnassigned(h, b)) continue;
        if (std::find(child_courses.begin(), child_courses.end(), b) ==
            child_courses.end()) {
          child_courses.push_back(b);
        }
      }
      std::sort(child_courses.begin(), child_courses.end());
      std::vector<std::vector<int>> combos = {base};
      bool possible = true;
      for (const int b : child_courses) {
        std::vector<int> options;
        for (const int child : inst_.children_of(root)) {
          if (inst_.course_of(child) == b && Open(child)) options.push_back(child);
        }
        bool can_skip = false;
        for (const int alt : inst_.sections_of_course(b)) {
          const int ap = inst_.parent_of(alt);
          if (Open(alt) &&
              (ap < 0 || inst_.course_of(ap) != inst_.course_of(root))) {
            can_skip = true;
            break;
          }
        }
        if (options.empty() && !can_skip) {
          possible = false;
          break;
        }
        std::vector<std::vector<int>> next;
        for (const auto& combo : combos) {
          if (can_skip) next.push_back(combo);
          for (const int child : options) {
            if (next.size() >= kMaxFamilyCombinations) break;
            auto extended = combo;
            extended.push_back(child);
            next.push_back(std::move(extended));
          }
        }
        combos = std::move(next);
      }
      if (!possible) continue;
      for (auto& combo : combos) units.push_back(std::move(combo));
    }
    return units;
  }

  absl::Status Enroll(int h, int source, int* copied, int* fresh) {
    if (source >= 0) {
      const std::vector<int> from = sectioning_.Schedule(source);
      // Parents and standalone sections first so children find their parent.
      for (const bool children_pass : {false, true}) {
        for (const int s : from) {
          const int p = inst_.parent_of(s);
          if ((p >= 0) != children_pass) continue;
          const int c = inst_.course_of(s);
          if (!NeedsUnassigned(h, c) || !Open(s)) continue;
          if (p >= 0 && Held(h, inst_.course_of(p)) != p) continue;
          Add(h, s);
          ++*copied;
        }
      }
    }
    const std::vector<int>& courses = inst_.students()[h].courses;
    for (const int c : courses) {
      if (Held(h, c) >= 0) continue;
      const std::vector<std::vector<int>> units = Units(h, c);
      if (units.empty()) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "infeasible capacity: no open section of course '",
            inst_.courses()[c].id, "' for student '",
            inst_.students()[h].id, "'"));
      }
      size_t chosen;
      if (first_student_) {
        chosen = rng_.Below(units.size());
      } else {
        int best_cost = std::numeric_limits<int>::max();
        int best_load = std::numeric_limits<int>::max();
        std::vector<size_t> ties;
        for (size_t i = 0; i < units.size(); ++i) {
          const int cost = NewEdges(h, units[i]);
          int primary_load = 0;
          for (const int s : units[i]) {
            if (inst_.course_of(s) == c) primary_load = load_[s];
          }
          if (cost < best_cost ||
              (cost == best_cost && primary_load < best_load)) {
            best_cost = cost;
            best_load = primary_load;
            ties.clear();
          }
          if (cost == best_cost && primary_load == best_load) ties.push_back(i);
        }
        chosen = rng_.Pick(ties);
      }
      for (const int s : units[chosen]) {
        Add(h, s);
        ++*fresh;
      }
    }
    first_student_ = false;
    return absl::OkStatus();
  }

  const Instance& inst_;
  const int n_;
  Rng rng_;
  Sectioning sectioning_;
  std::vector<uint8_t> adj_;
  std::vector<int> load_;
  int64_t edges_ = 0;
  bool first_student_ = true;
};

}  // namespace

absl::StatusOr<GreedyResult> GreedySection(const Instance& instance,
                                           uint64_t seed) {
  GreedyChain chain(instance, seed);
  return chain.Run();
}

std::string SerializeGreedyTrace(const Instance& instance,
                                 const GreedyTrace& trace) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  nlohmann::ordered_json visits = nlohmann::ordered_json::array();
  for (size_t i = 0; i < trace.visit_order.size(); ++i) {
    nlohmann::ordered_json v = nlohmann::ordered_json::object();
    v["student"] = instance.students()[trace.visit_order[i]].id;
    v["copied"] = trace.copied[i];
    v["fresh"] = trace.fresh[i];
    v["edges"] = trace.running_edges[i];
    visits.push_back(std::move(v));
  }
  doc["visits"] = std::move(visits);
  nlohmann::ordered_json fallbacks = nlohmann::ordered_json::array();
  for (const int g : trace.copy_fallbacks) {
    fallbacks.push_back(instance.students()[g].id);
  }
  doc["copy_fallbacks"] = std::move(fallbacks);
  return doc.dump(2) + "\n";
}

}  // namespace sectime
