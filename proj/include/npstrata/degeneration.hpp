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
#include "npstrata/newton.hpp"

namespace npstrata {

// A numerical degeneration of compact type: the entries of a indexed by
// subset (0-based) plus a new point form alpha1 over m; the remaining entries,
// divided by r, plus a new point form alpha2 over m / r.
struct Degeneration {
  std::vector<int> subset;
  MonodromyDatum alpha1;
  MonodromyDatum alpha2;
  int r = 1;

  // Ind_{m/r}^m alpha2, i.e. r * alpha2.
  std::vector<int> induced() const;
  // "(2,5,1)+(7,4,5)" or "(5,5,6)+Ind_4^8(1,2,1)"
  std::string text() const;
};

std::vector<Degeneration> degenerations(const MonodromyDatum& d);

// Parses "(2,5,1)+(7,4,5)" or "(5,5,6)+Ind_4^8(1,2,1)" with alpha1 over m.
// The subset is left empty.
Degeneration parse_degeneration(const std::string& text, int m);
// Identifies degenerations up to equivalence of the two data; for r = 1 the
// two sides are unordered.
std::string degeneration_key(const Degeneration& deg);

struct DecompositionWitness {
  Degeneration degeneration;
  NewtonPolygon nu1;
  NewtonPolygon nu2;
};

std::vector<NewtonPolygon> pel_decomposable_set(const MonodromyDatum& d, Residue p);
std::optional<DecompositionWitness> is_pel_decomposable(const MonodromyDatum& d, Residue p,
                                                        const NewtonPolygon& nu);

}  // namespace npstrata
