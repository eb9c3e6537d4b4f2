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

#include "npstrata/tables.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "npstrata/degeneration.hpp"
#include "npstrata/dieudonne.hpp"
#include "npstrata/kottwitz.hpp"

namespace npstrata {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "; " : "") + xs[i];
  return out + "}";
}

std::string join_ints(const std::vector<int>& xs) { return EOType{xs}.text(); }

// Canonicalizes golden polygon strings so that equivalent spellings compare
// equal while the comparison itself stays a string comparison.
std::vector<std::string> canonical(const std::vector<std::string>& texts) {
  std::vector<std::string> out;
  for (const auto& t : texts) out.push_back(parse_polygon(t).text());
  return out;
}

std::vector<std::string> texts(const std::vector<NewtonPolygon>& set) {
  std::vector<std::string> out;
  for (const auto& nu : set) out.push_back(nu.text());
  return out;
}

ComputedCell compute_cell(const FamilyRecord& f, const GoldenCell& golden) {
  const auto& d = f.datum;
  const auto p = Residue::make(d.m(), golden.classes.front());
  ComputedCell c;
  c.family = f.id;
  c.m = d.m();
  c.a = d.a();
  c.classes = class_of(p);
  const auto set = newton_polygon_set(d, p);
  c.np_set = texts(set);
  const auto module = mu_ordinary_module(d, p);
  c.mu_ordinary_module = module_summary(module);
  c.eo_type = eo_type(module).psi;
  if (d.n_points() >= 4) {
    auto dec = pel_decomposable_set(d, p);
    if (p.value() == 1) dec.erase(std::remove(dec.begin(), dec.end(), set.front()), dec.end());
    c.decomposable = texts(dec);
  }
  return c;
}

}  // namespace

TablesResult verify_tables(const Registry& registry, const std::optional<std::string>& family) {
  std::vector<const FamilyRecord*> selected;
  if (family)
    selected.push_back(&registry.lookup(*family));
  else
    for (const auto& f : registry.families()) selected.push_back(&f);

  // Cells are independent; compute them concurrently and assemble in order.
  std::vector<std::future<ComputedCell>> jobs;
  for (const auto* f : selected)
    for (const auto& cell : f->cells)
      jobs.push_back(std::async(std::launch::async, compute_cell, std::cref(*f), std::cref(cell)));

  TablesResult result;
  std::size_t next = 0;
  for (const auto* f : selected) {
    const int m = f->datum.m();
    std::set<int> covered;
    for (const auto& golden : f->cells) {
      ComputedCell c = jobs[next++].get();
      ++result.cells_checked;
      const std::string where = class_text(m, golden.classes);
      auto mismatch = [&](const std::string& field, const std::string& expected,
                          const std::string& actual, const std::string& source) {
        result.mismatches.push_back({f->id, where, field, expected, actual, source});
      };
      if (c.classes != golden.classes)
        mismatch("classes", join_ints(golden.classes), join_ints(c.classes), golden.source);
      covered.insert(golden.classes.begin(), golden.classes.end());
      const auto expected_set = canonical(golden.np_set);
      if (expected_set != c.np_set)
        mismatch("np_set", join(expected_set), join(c.np_set), golden.source);
      if (golden.mu_ordinary_module != c.mu_ordinary_module)
        mismatch("mu_ordinary_module", golden.mu_ordinary_module, c.mu_ordinary_module,
                 golden.source);
      if (golden.eo_type && *golden.eo_type != c.eo_type)
        mismatch("eo_type", join_ints(*golden.eo_type), join_ints(c.eo_type), golden.source);
      if (golden.decomposable) {
        auto expected = canonical(*golden.decomposable);
        std::sort(expected.begin(), expected.end());
        auto actual = c.decomposable;
        std::sort(actual.begin(), actual.end());
        if (expected != actual)
          mismatch("decomposable", join(expected), join(actual), golden.decomposable_source);
      }
      result.computed.push_back(std::move(c));
    }
    for (const auto& cls : congruence_classes(m))
      if (!covered.count(cls.front()))
        result.mismatches.push_back(
            {f->id, class_text(m, cls), "classes", "(no golden cell)", "computed", ""});
    if (f->degenerations) {
      std::set<std::string> expected, actual;
      for (const auto& t : *f->degenerations) expected.insert(degeneration_key(parse_degeneration(t, m)));
      for (const auto& deg : degenerations(f->datum)) actual.insert(degeneration_key(deg));
      if (expected != actual) {
        std::vector<std::string> e(expected.begin(), expected.end()), a(actual.begin(), actual.end());
        result.mismatches.push_back({f->id, "all classes", "degenerations", join(e), join(a),
                                     "decomposability table, row " + f->id});
      }
    }
  }
  return result;
}

nlohmann::json tables_to_json(const TablesResult& result) {
  using nlohmann::json;
  json families = json::array();
  for (const auto& c : result.computed) {
    if (families.empty() || families.back()["id"] != c.family)
      families.push_back(
          {{"id", c.family}, {"m", c.m}, {"a", c.a}, {"cells", json::array()}});
    families.back()["cells"].push_back({{"classes", c.classes},
                                        {"np_set", c.np_set},
                                        {"mu_ordinary_module", c.mu_ordinary_module},
                                        {"eo_type", c.eo_type},
                                        {"decomposable", c.decomposable}});
  }
  return json{{"schema", "npg-golden/1"}, {"families", families}};
}

}  // namespace npstrata
