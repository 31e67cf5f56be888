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

#include <initializer_list>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "sectime/instance.h"

namespace sectime {
namespace {

using Json = nlohmann::ordered_json;

// Parsing helpers report the JSON path of the offending value.
class Reader {
 public:
  absl::Status error() const { return error_; }
  bool ok() const { return error_.ok(); }

  void Fail(const std::string& path, const std::string& what) {
    if (error_.ok()) {
      error_ = absl::InvalidArgumentError(
          absl::StrCat("syntax error at ", path, ": ", what));
    }
  }

  bool ExpectObject(const Json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
      Fail(path, "expected an object");
      return false;
    }
    for (const auto& [key, value] : j.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) {
        Fail(path, absl::StrCat("unknown key '", key, "'"));
        return false;
      }
    }
    return true;
  }

  const Json* Field(const Json& j, const std::string& path, const char* key,
                    bool required) {
    const auto it = j.find(key);
    if (it == j.end()) {
      if (required) Fail(path, absl::StrCat("missing key '", key, "'"));
      return nullptr;
    }
    return &*it;
  }

  int Int(const Json& j, const std::string& path, const char* key) {
    const Json* v = Field(j, path, key, true);
    if (v == nullptr) return 0;
    if (!v->is_number_integer()) {
      Fail(absl::StrCat(path, ".", key), "expected an integer");
      return 0;
    }
    return v->get<int>();
  }

  std::optional<int> OptInt(const Json& j, const std::string& path,
                            const char* key) {
    const Json* v = Field(j, path, key, false);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_integer()) {
      Fail(absl::StrCat(path, ".", key), "expected an integer");
      return std::nullopt;
    }
    return v->get<int>();
  }

  double Real(const Json& j, const std::string& path, const char* key,
              double fallback) {
    const Json* v = Field(j, path, key, false);
    if (v == nullptr) return fallback;
    if (!v->is_number()) {
      Fail(absl::StrCat(path, ".", key), "expected a number");
      return fallback;
    }
    return v->get<double>();
  }

  std::string Str(const Json& j, const std::string& path, const char* key) {
    const Json* v = Field(j, path, key, true);
    if (v == nullptr) return "";
    if (!v->is_string()) {
      Fail(absl::StrCat(path, ".", key), "expected a string");
      return "";
    }
    return v->get<std::string>();
  }

  std::optional<std::string> OptStr(const Json& j, const std::string& path,
                                    const char* key) {
    const Json* v = Field(j, path, key, false);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) {
      Fail(absl::StrCat(path, ".", key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  bool Bool(const Json& j, const std::string& path, const char* key) {
    const Json* v = Field(j, path, key, true);
    if (v == nullptr) return false;
    if (!v->is_boolean()) {
      Fail(absl::StrCat(path, ".", key), "expected a boolean");
      return false;
    }
    return v->get<bool>();
  }

  const Json* Array(const Json& j, const std::string& path, const char* key) {
    const Json* v = Field(j, path, key, true);
    if (v != nullptr && !v->is_array()) {
      Fail(absl::StrCat(path, ".", key), "expected an array");
      return nullptr;
    }
    return v;
  }

 private:
  absl::Status error_;
};

absl::StatusOr<InstanceData> FromJson(const Json& doc) {
  Reader rd;
  InstanceData data;
  if (!rd.ExpectObject(doc, "$",
                       {"grid", "rooms", "professors", "courses", "sections",
                        "major_groups", "common_section_id", "weights"})) {
    return rd.error();
  }

  if (const Json* grid = rd.Field(doc, "$", "grid", true); grid != nullptr) {
    if (rd.ExpectObject(*grid, "$.grid",
                        {"days", "periods_per_day", "lunch_period"})) {
      data.grid.days = rd.Int(*grid, "$.grid", "days");
      data.grid.periods_per_day = rd.Int(*grid, "$.grid", "periods_per_day");
      data.grid.lunch_period = rd.OptInt(*grid, "$.grid", "lunch_period");
    }
  }

  if (const Json* rooms = rd.Array(doc, "$", "rooms"); rooms != nullptr) {
    for (size_t i = 0; i < rooms->size() && rd.ok(); ++i) {
      const std::string path = absl::StrCat("$.rooms[", i, "]");
      const Json& r = (*rooms)[i];
      if (!rd.ExpectObject(r, path, {"id", "room_type"})) break;
      data.rooms.push_back(
          Room{rd.Str(r, path, "id"), rd.Str(r, path, "room_type")});
    }
  }

  if (const Json* profs = rd.Array(doc, "$", "professors"); profs != nullptr) {
    for (size_t i = 0; i < profs->size() && rd.ok(); ++i) {
      const std::string path = absl::StrCat("$.professors[", i, "]");
      const Json& p = (*profs)[i];
      if (!rd.ExpectObject(p, path, {"id", "requested_day_off"})) break;
      data.professors.push_back(Professor{
          rd.Str(p, path, "id"), rd.OptInt(p, path, "requested_day_off")});
    }
  }

  if (const Json* courses = rd.Array(doc, "$", "courses"); courses != nullptr) {
    for (size_t i = 0; i < courses->size() && rd.ok(); ++i) {
      const std::string path = absl::StrCat("$.courses[", i, "]");
      const Json& c = (*courses)[i];
      if (!rd.ExpectObject(c, path, {"id"})) break;
      data.courses.push_back(Course{rd.Str(c, path, "id")});
    }
  }

  if (const Json* sections = rd.Array(doc, "$", "sections");
      sections != nullptr) {
    for (size_t i = 0; i < sections->size() && rd.ok(); ++i) {
      const std::string path = absl::StrCat("$.sections[", i, "]");
      const Json& s = (*sections)[i];
      if (!rd.ExpectObject(s, path,
                           {"id", "course_id", "capacity", "professor_id",
                            "room_type", "meetings_per_week", "is_extended",
                            "parent_id"})) {
        break;
      }
      Section sec;
      sec.id = rd.Str(s, path, "id");
      sec.course_id = rd.Str(s, path, "course_id");
      sec.capacity = rd.Int(s, path, "capacity");
      sec.professor_id = rd.Str(s, path, "professor_id");
      sec.room_type = rd.Str(s, path, "room_type");
      sec.meetings_per_week = rd.Int(s, path, "meetings_per_week");
      sec.is_extended = rd.Bool(s, path, "is_extended");
      sec.parent_id = rd.OptStr(s, path, "parent_id");
      data.sections.push_back(std::move(sec));
    }
  }

  if (const Json* groups = rd.Array(doc, "$", "major_groups");
      groups != nullptr) {
    for (size_t i = 0; i < groups->size() && rd.ok(); ++i) {
      const std::string path = absl::StrCat("$.major_groups[", i, "]");
      const Json& g = (*groups)[i];
      if (!rd.ExpectObject(g, path, {"id", "size", "required_course_ids"})) {
        break;
      }
      MajorGroup group;
      group.id = rd.Str(g, path, "id");
      group.size = rd.Int(g, path, "size");
      if (const Json* req = rd.Array(g, path, "required_course_ids");
          req != nullptr) {
        for (size_t k = 0; k < req->size(); ++k) {
          if (!(*req)[k].is_string()) {
            rd.Fail(absl::StrCat(path, ".required_course_ids[", k, "]"),
                    "expected a string");
            break;
          }
          group.required_course_ids.push_back((*req)[k].get<std::string>());
        }
      }
      data.major_groups.push_back(std::move(group));
    }
  }

  data.common_section_id = rd.OptStr(doc, "$", "common_section_id");

  if (const Json* weights = rd.Field(doc, "$", "weights", false);
      weights != nullptr &&
      rd.ExpectObject(*weights, "$.weights", {"edge", "soft"})) {
    if (const Json* e = rd.Field(*weights, "$.weights", "edge", false);
        e != nullptr &&
        rd.ExpectObject(*e, "$.weights.edge", {"a", "b", "c", "d"})) {
      EdgeWeights& w = data.edge_weights;
      w.a = rd.Real(*e, "$.weights.edge", "a", w.a);
      w.b = rd.Real(*e, "$.weights.edge", "b", w.b);
      w.c = rd.Real(*e, "$.weights.edge", "c", w.c);
      w.d = rd.Real(*e, "$.weights.edge", "d", w.d);
    }
    if (const Json* s = rd.Field(*weights, "$.weights", "soft", false);
        s != nullptr &&
        rd.ExpectObject(*s, "$.weights.soft",
                        {"clash", "common_multiplier", "room_overflow",
                         "double_meeting", "prof_day_off"})) {
      SoftWeights& w = data.soft_weights;
      w.clash = rd.Real(*s, "$.weights.soft", "clash", w.clash);
      w.common_multiplier =
          rd.Real(*s, "$.weights.soft", "common_multiplier",
                  w.common_multiplier);
      w.room_overflow =
          rd.Real(*s, "$.weights.soft", "room_overflow", w.room_overflow);
      w.double_meeting =
          rd.Real(*s, "$.weights.soft", "double_meeting", w.double_meeting);
      w.prof_day_off =
          rd.Real(*s, "$.weights.soft", "prof_day_off", w.prof_day_off);
    }
  }
  if (!rd.ok()) return rd.error();
  return data;
}

Json ToJson(const InstanceData& data) {
  Json doc = Json::object();
  Json grid = Json::object();
  grid["days"] = data.grid.days;
  grid["periods_per_day"] = data.grid.periods_per_day;
  if (data.grid.lunch_period.has_value()) {
    grid["lunch_period"] = *data.grid.lunch_period;
  }
  doc["grid"] = std::move(grid);

  Json rooms = Json::array();
  for (const Room& r : data.rooms) {
    Json j = Json::object();
    j["id"] = r.id;
    j["room_type"] = r.room_type;
    rooms.push_back(std::move(j));
  }
  doc["rooms"] = std::move(rooms);

  Json profs = Json::array();
  for (const Professor& p : data.professors) {
    Json j = Json::object();
    j["id"] = p.id;
    if (p.requested_day_off.has_value()) {
      j["requested_day_off"] = *p.requested_day_off;
    }
    profs.push_back(std::move(j));
  }
  doc["professors"] = std::move(profs);

  Json courses = Json::array();
  for (const Course& c : data.courses) {
    Json j = Json::object();
    j["id"] = c.id;
    courses.push_back(std::move(j));
  }
  doc["courses"] = std::move(courses);

  Json sections = Json::array();
  for (const Section& s : data.sections) {
    Json j = Json::object();
    j["id"] = s.id;
    j["course_id"] = s.course_id;
    j["capacity"] = s.capacity;
    j["professor_id"] = s.professor_id;
    j["room_type"] = s.room_type;
    j["meetings_per_week"] = s.meetings_per_week;
    j["is_extended"] = s.is_extended;
    if (s.parent_id.has_value()) j["parent_id"] = *s.parent_id;
    sections.push_back(std::move(j));
  }
  doc["sections"] = std::move(sections);

  Json groups = Json::array();
  for (const MajorGroup& g : data.major_groups) {
    Json j = Json::object();
    j["id"] = g.id;
    j["size"] = g.size;
    j["required_course_ids"] = g.required_course_ids;
    groups.push_back(std::move(j));
  }
  doc["major_groups"] = std::move(groups);

  if (data.common_section_id.has_value()) {
    doc["common_section_id"] = *data.common_section_id;
  }

  Json edge = Json::object();
  edge["a"] = data.edge_weights.a;
  edge["b"] = data.edge_weights.b;
  edge["c"] = data.edge_weights.c;
  edge["d"] = data.edge_weights.d;
  Json soft = Json::object();
  soft["clash"] = data.soft_weights.clash;
  soft["common_multiplier"] = data.soft_weights.common_multiplier;
  soft["room_overflow"] = data.soft_weights.room_overflow;
  soft["double_meeting"] = data.soft_weights.double_meeting;
  soft["prof_day_off"] = data.soft_weights.prof_day_off;
  Json weights = Json::object();
  weights["edge"] = std::move(edge);
  weights["soft"] = std::move(soft);
  doc["weights"] = std::move(weights);
  return doc;
}

}  // namespace

absl::StatusOr<Instance> ParseInstance(absl::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("syntax error at byte ", e.byte, ": ", e.what()));
  }
  absl::StatusOr<InstanceData> data = FromJson(doc);
  if (!data.ok()) return data.status();
  absl::StatusOr<Instance> inst = Instance::Create(*std::move(data));
  if (!inst.ok()) return inst.status();
  const std::vector<Violation> violations = Validate(*inst);
  if (!violations.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat("invariant violation: ", FormatViolations(violations)));
  }
  return inst;
}

std::string SerializeInstance(const InstanceData& data) {
  return ToJson(data).dump(2) + "\n";
}

}  // namespace sectime
