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

#include "npstrata/registry.hpp"

namespace npstrata {

struct CellMismatch {
  std::string family;
  std::string cell;   // "p ≡ 2,4 mod 7", or "all classes" for family fields
  std::string field;  // np_set, mu_ordinary_module, eo_type, decomposable, degenerations
  std::string expected;
  std::string actual;
  std::string source;
};

struct ComputedCell {
  std::string family;
  int m = 0;
  std::vector<int> a;
  std::vector<int> classes;
  std::vector<std::string> np_set;
  std::string mu_ordinary_module;
  std::vector<int> eo_type;
  std::vector<std::string> decomposable;  // mu-ordinary omitted when p = 1 mod m
};

struct TablesResult {
  int cells_checked = 0;
  std::vector<ComputedCell> computed;
  std::vector<CellMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Recomputes every golden cell (optionally of one family) and compares the
// canonical strings with the registry.
TablesResult verify_tables(const Registry& registry,
                           const std::optional<std::string>& family = std::nullopt);

// The regenerated tables in the layout of the golden data file.
nlohmann::json tables_to_json(const TablesResult& result);

}  // namespace npstrata
