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

#include "npstrata/registry.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace npstrata {

extern const char* const kEmbeddedGoldenTables;

const GoldenCell& FamilyRecord::cell_for(int p_residue) const {
  const int r = static_cast<int>(mod_floor(p_residue, datum.m()));
  for (const auto& c : cells)
    if (std::find(c.classes.begin(), c.classes.end(), r) != c.classes.end()) return c;
  throw DomainError(id + " has no golden cell for p = " + std::to_string(r) + " mod " +
                    std::to_string(datum.m()));
}

int family_number(const std::string& id) {
  static const std::regex re(R"(^\s*(?:M\s*\[?\s*)?(\d+)\s*\]?\s*$)");
  std::smatch m;
  if (!std::regex_match(id, m, re)) throw DomainError("malformed family id '" + id + "'");
  return std::stoi(m[1]);
}

Registry Registry::from_json(const std::string& text) {
  using nlohmann::json;
  Registry reg;
  json doc;
  try {
    doc = json::parse(text);
    for (const auto& f : doc.at("families")) {
      const auto id = f.at("id").get<std::string>();
      FamilyRecord rec{id, family_number(id),
                       MonodromyDatum::make(f.at("m").get<int>(),
                                            f.at("a").get<std::vector<long long>>()),
                       f.at("dimension").get<int>(), std::nullopt, {}};
      if (f.contains("degenerations"))
        rec.degenerations = f.at("degenerations").get<std::vector<std::string>>();
      for (const auto& c : f.at("cells")) {
        GoldenCell cell;
        cell.classes = c.at("classes").get<std::vector<int>>();
        cell.np_set = c.at("np_set").get<std::vector<std::string>>();
        cell.mu_ordinary_module = c.at("mu_ordinary_module").get<std::string>();
        if (c.contains("eo_type")) cell.eo_type = c.at("eo_type").get<std::vector<int>>();
        if (c.contains("decomposable"))
          cell.decomposable = c.at("decomposable").get<std::vector<std::string>>();
        cell.source = c.value("source", "");
        cell.decomposable_source = c.value("decomposable_source", "");
        rec.cells.push_back(std::move(cell));
      }
      reg.families_.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed golden data: ") + e.what());
  }
  return reg;
}

Registry Registry::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open golden data file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return from_json(os.str());
}

const Registry& Registry::builtin() {
  static const Registry reg = from_json(kEmbeddedGoldenTables);
  return reg;
}

const FamilyRecord& Registry::lookup(const std::string& id) const {
  const int n = family_number(id);
  for (const auto& f : families_)
    if (f.number == n) return f;
  throw DomainError("unknown family " + id);
}

std::optional<std::string> Registry::match_datum(const MonodromyDatum& d) const {
  for (const auto& f : families_)
    if (equivalent(f.datum, d)) return f.id;
  return std::nullopt;
}

}  // namespace npstrata
