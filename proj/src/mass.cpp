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

#include "npstrata/mass.hpp"

#include <sstream>

#include "npstrata/errors.hpp"

namespace npstrata {

bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d != 0) continue;
    while (q % d == 0) q /= d;
    return q == 1;
  }
  return true;
}

MassCase parse_mass_case(const std::string& name) {
  if (name == "split") return MassCase::kSplit;
  if (name == "inert") return MassCase::kInert;
  throw DomainError("unknown case '" + name + "' (expected split or inert)");
}

BigInt local_factor(const MassInput& in) {
  if (in.n < 1) throw DomainError("n must be positive");
  if (!is_prime_power(in.q)) throw DomainError(std::to_string(in.q) + " is not a prime power");
  const BigInt q = in.q;
  if (in.kind == MassCase::kSplit) {
    BigInt out = 1;
    for (int i = 2; i <= in.n; ++i) out *= boost::multiprecision::pow(q, in.n - i + 1) - 1;
    return out;
  }
  if (in.n % 2 != 0) throw DomainError("the inert local factor requires n even");
  const BigInt num = boost::multiprecision::pow(q, in.n) - 1;
  if (num % (q + 1) != 0) throw ConsistencyError("q + 1 does not divide q^n - 1");
  return num / (q + 1);
}

std::vector<std::pair<long long, BigInt>> growth_table(MassCase kind, int n,
                                                       const std::vector<long long>& qs) {
  std::vector<std::pair<long long, BigInt>> out;
  for (long long q : qs) {
    if (!out.empty() && q <= out.back().first)
      throw DomainError("q values must be strictly increasing");
    BigInt lambda = local_factor({kind, n, q});
    if (n >= 2 && !out.empty() && lambda <= out.back().second)
      throw ConsistencyError("local factor does not grow from q = " +
                             std::to_string(out.back().first) + " to q = " + std::to_string(q));
    out.emplace_back(q, std::move(lambda));
  }
  return out;
}

std::string growth_table_tsv(MassCase kind, int n, const std::vector<long long>& qs) {
  std::ostringstream os;
  os << "q\tlambda\n";
  for (const auto& [q, lambda] : growth_table(kind, n, qs)) os << q << "\t" << lambda << "\n";
  return os.str();
}

}  // namespace npstrata
