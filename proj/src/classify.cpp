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

#include "npstrata/classify.hpp"

#include <algorithm>

#include "npstrata/kottwitz.hpp"

namespace npstrata {

namespace {

constexpr std::pair<Verdict, const char*> kNames[] = {
    {Verdict::kSmoothMuOrdinary, "SMOOTH_MU_ORDINARY"},
    {Verdict::kSmoothIndecomposable, "SMOOTH_INDECOMPOSABLE"},
    {Verdict::kSmoothPurity, "SMOOTH_PURITY"},
    {Verdict::kSmoothBasicLargeP, "SMOOTH_BASIC_LARGE_P"},
    {Verdict::kOpenSupersingular, "OPEN_SUPERSINGULAR"},
    {Verdict::kSmoothClassical, "SMOOTH_CLASSICAL"},
};

bool totally_ordered(const std::vector<NewtonPolygon>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!lies_on_or_above(set[i], set[j]) && !lies_on_or_above(set[j], set[i])) return false;
  return true;
}

}  // namespace

std::string verdict_name(Verdict v) {
  for (const auto& [verdict, name] : kNames)
    if (verdict == v) return name;
  throw ConsistencyError("unnamed verdict");
}

Verdict parse_verdict(const std::string& name) {
  for (const auto& [verdict, n] : kNames)
    if (name == n) return verdict;
  throw DomainError("unknown verdict " + name);
}

bool is_smooth(Verdict v) { return v != Verdict::kOpenSupersingular; }

bool split_prime_excluded(int family, Residue p) {
  switch (family) {
    case 6:
    case 8:
    case 14:
      return p.value() == p.modulus() - 1;
    case 16:
      return p.value() != 1;
    default:
      return false;
  }
}

std::vector<OccurrenceStatus> classify(const MonodromyDatum& d, Residue p,
                                       const Registry& registry) {
  const auto id = registry.match_datum(d);
  if (!id) throw DomainError(d.text() + " is not one of the special families");
  const auto& family = registry.lookup(*id);
  const auto set = newton_polygon_set(d, p);
  const NewtonPolygon& mu = set.front();
  const NewtonPolygon& basic = set.back();
  const int dim = family_dimension(d);

  std::vector<OccurrenceStatus> out;
  if (d.m() == 2) {
    for (const auto& nu : set) {
      if (nu == mu)
        out.push_back({nu, Verdict::kSmoothMuOrdinary, "mu-ordinary locus is open and dense", {}});
      else
        out.push_back({nu, Verdict::kSmoothClassical,
                       "the family is dense in A_" + std::to_string(genus(d)) +
                           ", where every polygon occurs for a smooth curve",
                       {}});
    }
    return out;
  }

  std::vector<bool> pending(set.size(), false);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& nu = set[i];
    if (nu == mu) {
      out.push_back({nu, Verdict::kSmoothMuOrdinary, "mu-ordinary locus is open and dense", {}});
      continue;
    }
    auto witness = is_pel_decomposable(d, p, nu);
    if (!witness) {
      out.push_back({nu, Verdict::kSmoothIndecomposable,
                     "not PEL-decomposable, so it cannot come only from the boundary", {}});
      continue;
    }
    out.push_back({nu, Verdict::kOpenSupersingular, "", std::move(witness)});
    pending[i] = true;
  }

  const bool ordered = totally_ordered(set);
  const bool basic_ss = invariants(basic).supersingular;
  const bool basic_smooth = is_smooth(out.back().verdict) && !pending.back();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!pending[i]) continue;
    auto& status = out[i];
    const auto& nu = set[i];
    if (dim >= 2 && !basic_ss && basic_smooth && ordered) {
      status.verdict = Verdict::kSmoothPurity;
      status.justification = "purity: the set is totally ordered and the basic polygon occurs";
    } else if (dim == 1 && nu == basic && invariants(nu).supersingular) {
      status.verdict = Verdict::kSmoothBasicLargeP;
      status.justification =
          "dimension one: the basic locus has unboundedly many components, for p large";
    } else if (invariants(nu).supersingular) {
      status.verdict = Verdict::kOpenSupersingular;
      status.justification = "supersingular and PEL-decomposable; no criterion applies";
      if (dim == 2 && split_prime_excluded(family.number, p))
        status.justification += " (p is not split, so the component count is not available)";
    } else {
      throw ConsistencyError("no occurrence criterion applies to " + nu.text() + " for " +
                             family.id);
    }
  }
  return out;
}

}  // namespace npstrata
