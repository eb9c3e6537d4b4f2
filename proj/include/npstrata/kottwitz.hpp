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

#include <string>
#include <vector>

#include "npstrata/monodromy.hpp"
#include "npstrata/newton.hpp"

namespace npstrata {

// An orbit of n -> p*n on {1, ..., m-1}.
struct CharacterOrbit {
  int m = 0;
  int p = 0;
  int id = 0;       // index in the orbit list (sorted by smallest element)
  int dual_id = 0;  // index of the orbit of -n
  std::vector<int> cycle;     // n, pn, p^2 n, ... starting at the smallest element
  std::vector<int> elements;  // sorted
  std::vector<int> f;         // f-values aligned with cycle
  int order = 0;              // multiplicative order of the elements' characters
  int g = 0;                  // f(n) + f(-n), constant on the orbit

  int length() const { return static_cast<int>(cycle.size()); }
  bool self_dual() const { return dual_id == id; }
  int f_sum() const;
  int f_of(int n) const;
  // "{1,2,4}"
  std::string text() const;
};

struct MuOrdinaryOrbitData {
  int s = 0;
  std::vector<int> E;                   // E(0) = g > E(1) > ... > E(s+1) = 0
  std::vector<Rational> slopes;         // lambda(0..s)
  std::vector<long long> multiplicities;
  NewtonPolygon polygon;
};

std::vector<CharacterOrbit> orbit_decomposition(const Signature& sig, Residue p);
MuOrdinaryOrbitData mu_ordinary_orbit(const CharacterOrbit& o);
NewtonPolygon mu_ordinary(const MonodromyDatum& d, Residue p);
// Convex lattice paths satisfying the divisibility, on-or-above and (for
// self-dual orbits) symmetry conditions, sorted with polygon_less.
std::vector<NewtonPolygon> admissible_orbit_polygons(const CharacterOrbit& o);
std::vector<NewtonPolygon> newton_polygon_set(const MonodromyDatum& d, Residue p);
NewtonPolygon basic_polygon(const MonodromyDatum& d, Residue p);
// Units mod m grouped by the cyclic subgroup they generate, groups ordered by
// their smallest member.
std::vector<std::vector<int>> congruence_classes(int m);
// "p ≡ 2,4 mod 7"
std::string class_text(int m, const std::vector<int>& cls);
std::vector<int> class_of(Residue p);

}  // namespace npstrata
