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

#include "npstrata/degeneration.hpp"
#include "npstrata/monodromy.hpp"
#include "npstrata/newton.hpp"
#include "npstrata/registry.hpp"

namespace npstrata {

enum class Verdict {
  kSmoothMuOrdinary,
  kSmoothIndecomposable,
  kSmoothPurity,
  kSmoothBasicLargeP,
  kOpenSupersingular,
  // m = 2: the family fills out A_1 or A_2, where every polygon is known to
  // occur for a smooth curve.
  kSmoothClassical,
};

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& name);
bool is_smooth(Verdict v);

struct OccurrenceStatus {
  NewtonPolygon polygon;
  Verdict verdict = Verdict::kOpenSupersingular;
  std::string justification;
  std::optional<DecompositionWitness> witness;
};

// One status per member of newton_polygon_set(d, p), in the same order.
// Throws DomainError unless d is equivalent to one of the registry families.
std::vector<OccurrenceStatus> classify(const MonodromyDatum& d, Residue p,
                                       const Registry& registry = Registry::builtin());

// Families of dimension two for which the component-count argument needs p
// split in the quadratic imaginary field: M[6], M[8], M[14] at p = -1 mod m
// and M[16] at p != 1 mod 5.
bool split_prime_excluded(int family, Residue p);

}  // namespace npstrata
