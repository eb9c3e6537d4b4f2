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

// Independent reference computations used to derive and freeze expected
// values. None of these call into the library's algorithms beyond the basic
// value types.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "npstrata/kottwitz.hpp"
#include "npstrata/newton.hpp"

namespace oracle {

using npstrata::NewtonPolygon;

// Lexicographic minimum of u*a mod m over all units u and all orderings of a.
std::vector<int> normalize_by_permutations(int m, const std::vector<int>& a);

// Hodge-average polygon of an orbit: the j-th slope (j = 1..g) is
// #{tau : f(tau) >= g + 1 - j} / length, each with multiplicity length.
NewtonPolygon orbit_hodge_average(const npstrata::CharacterOrbit& o);

// All convex lattice paths from (0,0) to (length*g, sum f) with vertices on
// abscissae divisible by length, integer ordinates, slopes in [0,1], lying on
// or above the Hodge average, and symmetric when the orbit is self-dual.
std::vector<NewtonPolygon> orbit_polygons_brute_force(const npstrata::CharacterOrbit& o);

// q^{(1-n)n/2} prod_{i=1}^n (q^n - q^{i-1}) / (q^n - 1), evaluated as a
// rational number without cancellation.
boost::multiprecision::cpp_rational split_factor_unsimplified(int n, long long q);

// A module given by F/V maps on basis indices, -1 meaning zero.
struct WordModule {
  std::vector<int> F;
  std::vector<int> V;
  int rank() const { return static_cast<int>(F.size()); }
};

// Cycle on the letters of `word` (F: b_i -> b_{i+1}; V: b_{i+1} -> b_i under V).
WordModule module_from_word(const std::string& word);
WordModule direct_sum(const std::vector<WordModule>& parts);

int p_rank(const WordModule& M);
int a_number(const WordModule& M);  // dim(ker F cap ker V)
// psi(1..rank/2) through the canonical filtration, rank <= 64.
std::vector<int> eo_type(const WordModule& M);

// Expands "L^3 + N_{3,2}", "E/E(F^4-V^2)", "<F^3V^-1FV^-1>" into cyclic words
// over {F, V}, with L contributing "F" and "V".
std::vector<std::string> words_of_summary(const std::string& summary);

// Primitive root of a cyclic word in its least rotation, with the number of
// repetitions.
std::pair<std::string, int> primitive_cycle(const std::string& word);

}  // namespace oracle
