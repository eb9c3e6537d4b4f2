/*
 * Copyright 2026 The npstrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "npstrata/dieudonne.hpp"
#include "npstrata/monodromy.hpp"
#include "npstrata/newton.hpp"

namespace npstrata {

inline constexpr const char* kReportSchema = "npg/1";

struct OrbitReport {
  std::vector<int> cycle;
  std::vector<int> f;
  int g = 0;
  int dual = 0;
  NewtonPolygon mu;
  std::vector<NewtonPolygon> admissible;
  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

struct ComponentReport {
  std::string word;
  std::string name;
  int copies = 1;
  ModuleInvariants invariants;
  std::optional<EOType> eo;
  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct VerdictReport {
  NewtonPolygon polygon;
  std::string verdict;
  std::string justification;
  std::string witness;  // degeneration and the two polygons, or empty
  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

// Everything computed for one datum and one congruence class of p. The class
// is identified by its smallest member, so any p in the class gives the same
// report.
struct Report {
  explicit Report(MonodromyDatum d) : datum(std::move(d)) {}

  MonodromyDatum datum;
  std::vector<int> residue_class;
  std::optional<std::string> family;
  std::vector<int> signature;
  int genus = 0;
  int dimension = 0;
  std::vector<OrbitReport> orbits;
  NewtonPolygon mu_ordinary;
  std::vector<NewtonPolygon> np_set;
  NewtonPolygon basic;
  ModuleInvariants module_invariants;
  EOType eo;
  std::string module_summary;
  std::vector<ComponentReport> components;
  std::vector<std::string> degenerations;
  std::vector<NewtonPolygon> decomposable;
  std::vector<VerdictReport> verdicts;  // only for the special families

  friend bool operator==(const Report&, const Report&) = default;
};

Report build_report(const MonodromyDatum& d, Residue p);

nlohmann::json datum_to_json(const MonodromyDatum& d);
MonodromyDatum datum_from_json(const nlohmann::json& j);
nlohmann::json polygon_to_json(const NewtonPolygon& nu);
NewtonPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);

}  // namespace npstrata
