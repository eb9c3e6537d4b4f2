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
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace npstrata {

using BigInt = boost::multiprecision::cpp_int;

enum class MassCase { kSplit, kInert };

struct MassInput {
  MassCase kind = MassCase::kSplit;
  int n = 1;       // dimension of the hermitian space
  long long q = 2; // size of the residue field, a prime power
};

// split: prod_{i=2}^{n} (q^{n-i+1} - 1); inert: (q^n - 1) / (q + 1), n even.
BigInt local_factor(const MassInput& in);

// (q, lambda) for each q; checks strict growth when n >= 2.
std::vector<std::pair<long long, BigInt>> growth_table(MassCase kind, int n,
                                                       const std::vector<long long>& qs);
std::string growth_table_tsv(MassCase kind, int n, const std::vector<long long>& qs);

bool is_prime_power(long long q);
MassCase parse_mass_case(const std::string& name);

}  // namespace npstrata
