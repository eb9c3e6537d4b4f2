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

#include "npstrata/monodromy.hpp"

namespace npstrata {

// Expected values for one family and one congruence class of p.
struct GoldenCell {
  std::vector<int> classes;
  std::vector<std::string> np_set;
  std::string mu_ordinary_module;
  std::optional<std::vector<int>> eo_type;
  // PEL-decomposable polygons, without the mu-ordinary one when p = 1 mod m.
  std::optional<std::vector<std::string>> decomposable;
  std::string source;
  std::string decomposable_source;
};

struct FamilyRecord {
  std::string id;  // "M[17]"
  int number = 0;
  MonodromyDatum datum;
  int dimension = 0;
  std::optional<std::vector<std::string>> degenerations;
  std::vector<GoldenCell> cells;

  const GoldenCell& cell_for(int p_residue) const;
};

class Registry {
 public:
  static Registry from_json(const std::string& text);
  static Registry from_file(const std::string& path);
  // The tables compiled into the library.
  static const Registry& builtin();

  const std::vector<FamilyRecord>& families() const { return families_; }
  // Accepts "M[17]", "M17" or "17".
  const FamilyRecord& lookup(const std::string& id) const;
  std::optional<std::string> match_datum(const MonodromyDatum& d) const;

 private:
  std::vector<FamilyRecord> families_;
};

// "M17" -> 17; throws DomainError on malformed ids.
int family_number(const std::string& id);

}  // namespace npstrata
