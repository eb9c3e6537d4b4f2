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

#include "npstrata/degeneration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <regex>
#include <sstream>
#include <set>
#include <tuple>

#include "npstrata/kottwitz.hpp"

namespace npstrata {

std::vector<int> Degeneration::induced() const {
  std::vector<int> out;
  for (int x : alpha2.a()) out.push_back(r * x);
  return out;
}

std::string Degeneration::text() const {
  if (r == 1) return alpha1.tuple_text() + "+" + alpha2.tuple_text();
  return alpha1.tuple_text() + "+Ind_" + std::to_string(alpha2.m()) + "^" +
         std::to_string(alpha1.m()) + alpha2.tuple_text();
}

namespace {

std::optional<Degeneration> try_split(const MonodromyDatum& d, unsigned mask) {
  const int m = d.m();
  const int n = d.n_points();
  std::vector<long long> first, rest;
  long long sum = 0;
  std::vector<int> subset;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      first.push_back(d.a()[i]);
      sum += d.a()[i];
      subset.push_back(i);
    } else {
      rest.push_back(d.a()[i]);
    }
  }
  const long long joint = mod_floor(-sum, m);
  if (joint == 0) return std::nullopt;
  const int r = std::gcd(m, static_cast<int>(joint));
  for (long long x : rest)
    if (x % r != 0) return std::nullopt;
  first.push_back(joint);
  std::vector<long long> second{mod_floor(-joint / r, m / r)};
  for (long long x : rest) second.push_back(x / r);
  try {
    Degeneration deg{subset, MonodromyDatum::make(m, first), MonodromyDatum::make(m / r, second), r};
    return deg;
  } catch (const DatumError&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Degeneration> degenerations(const MonodromyDatum& d) {
  const int n = d.n_points();
  if (n > 30) throw DomainError("too many branch points to enumerate subsets");
  std::vector<Degeneration> out;
  std::set<std::string> seen;
  const int g = genus(d);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || size > n - 2) continue;
    auto deg = try_split(d, mask);
    if (!deg) continue;
    if (genus(deg->alpha1) + deg->r * genus(deg->alpha2) != g)
      throw ConsistencyError("degeneration " + deg->text() + " of " + d.text() +
                             " breaks the genus relation");
    if (!seen.insert(degeneration_key(*deg)).second) continue;
    out.push_back(std::move(*deg));
  }
  return out;
}

std::string degeneration_key(const Degeneration& deg) {
  auto n1 = normalize(deg.alpha1), n2 = normalize(deg.alpha2);
  if (deg.r == 1 && n2 < n1) std::swap(n1, n2);
  return n1.text() + " | r=" + std::to_string(deg.r) + " | " + n2.text();
}

Degeneration parse_degeneration(const std::string& text, int m) {
  static const std::regex re(
      R"(^\s*\(([-\d,\s]+)\)\s*\+\s*(?:Ind_\{?(\d+)\}?\^\{?(\d+)\}?\s*)?\(([-\d,\s]+)\)\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, re))
    throw DomainError("cannot parse degeneration '" + text + "'");
  auto numbers = [](std::string list) {
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream is(list);
    std::vector<long long> out;
    for (long long x; is >> x;) out.push_back(x);
    return out;
  };
  int sub = m;
  if (match[2].matched) {
    sub = std::stoi(match[2]);
    if (std::stoi(match[3]) != m) throw DomainError("induction target differs from m in '" + text + "'");
  }
  if (sub < 1 || m % sub != 0) throw DomainError("bad induction in '" + text + "'");
  return Degeneration{{}, MonodromyDatum::make(m, numbers(match[1])),
                      MonodromyDatum::make(sub, numbers(match[4])), m / sub};
}

namespace {

template <typename Visit>
void for_each_decomposition(const MonodromyDatum& d, Residue p, Visit visit) {
  for (const auto& deg : degenerations(d)) {
    const auto first = newton_polygon_set(deg.alpha1, p);
    const auto second = newton_polygon_set(deg.alpha2, p.reduce(deg.alpha2.m()));
    for (const auto& nu1 : first)
      for (const auto& nu2 : second)
        if (visit(deg, nu1, nu2)) return;
  }
}

}  // namespace

std::vector<NewtonPolygon> pel_decomposable_set(const MonodromyDatum& d, Residue p) {
  std::vector<NewtonPolygon> out;
  for_each_decomposition(d, p, [&](const Degeneration& deg, const NewtonPolygon& nu1,
                                   const NewtonPolygon& nu2) {
    out.push_back(merge(nu1, scale(nu2, deg.r)));
    return false;
  });
  sort_unique(out);
  return out;
}

std::optional<DecompositionWitness> is_pel_decomposable(const MonodromyDatum& d, Residue p,
                                                        const NewtonPolygon& nu) {
  std::optional<DecompositionWitness> witness;
  for_each_decomposition(d, p, [&](const Degeneration& deg, const NewtonPolygon& nu1,
                                   const NewtonPolygon& nu2) {
    if (merge(nu1, scale(nu2, deg.r)) != nu) return false;
    witness = DecompositionWitness{deg, nu1, nu2};
    return true;
  });
  return witness;
}

}  // namespace npstrata
