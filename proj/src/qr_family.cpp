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

#include "npstrata/qr_family.hpp"

#include "npstrata/kottwitz.hpp"

namespace npstrata {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_quadratic_residue(long long n, int m) {
  const long long r = mod_floor(n, m);
  if (r == 0) return false;
  for (long long x = 1; x < m; ++x)
    if (x * x % m == r) return true;
  return false;
}

QRFamilyData qr_datum(int m) {
  if (!is_prime(m) || m % 4 != 3)
    throw DomainError("m = " + std::to_string(m) + " must be a prime congruent to 3 mod 4");
  if (m < 7) throw DomainError("m = " + std::to_string(m) + " gives fewer than 3 branch points");
  std::vector<long long> qr;
  for (int n = 1; n < m; ++n)
    if (is_quadratic_residue(n, m)) qr.push_back(n);
  const auto d = MonodromyDatum::make(m, qr);
  const auto sig = signature(d);
  QRFamilyData out{m, d, sig.f(1), sig.f(m - 1), 0, 0, genus(d), 0};
  out.E1 = std::max(out.c1, out.c2);
  out.E2 = std::min(out.c1, out.c2);
  out.p_bound = static_cast<long long>(m) * (m - 7) / 2;
  for (int n = 1; n < m; ++n) {
    const int expected = is_quadratic_residue(n, m) ? out.c1 : out.c2;
    if (sig.f(n) != expected)
      throw ConsistencyError("signature is not constant on residues for m = " + std::to_string(m));
  }
  if (out.c1 + out.c2 != (m - 5) / 2 || out.c1 == out.c2)
    throw ConsistencyError("unexpected signature values for m = " + std::to_string(m));
  if (4 * out.genus != static_cast<long long>(m - 5) * (m - 1))
    throw ConsistencyError("unexpected genus for m = " + std::to_string(m));
  return out;
}

QRClosedForm qr_mu_ordinary_closed_form(int m) {
  const auto data = qr_datum(m);
  const int k = (m - 1) / 2;
  const int gap = data.E1 - data.E2;
  QRClosedForm out;
  out.polygon = scale(merge(NewtonPolygon::ord(2 * data.E2), NewtonPolygon::ss(gap)), k);
  std::vector<CombinatorialBT1> parts;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < 2 * data.E2; ++j) parts.push_back(CombinatorialBT1::L());
    for (int j = 0; j < gap; ++j) parts.push_back(CombinatorialBT1::N_r1(1));
  }
  out.module = CombinatorialBT1::direct_sum(parts);
  out.module_text = module_summary(out.module);
  out.half_multiplicity = out.polygon.multiplicity(Slope(1, 2));
  return out;
}

std::vector<QRCheck> qr_cross_check(int m) {
  const auto data = qr_datum(m);
  const auto closed = qr_mu_ordinary_closed_form(m);
  const auto closed_inv = module_invariants(closed.module);
  std::vector<QRCheck> out;
  for (int r = 1; r < m; ++r) {
    if (is_quadratic_residue(r, m)) continue;
    const auto p = Residue::make(m, r);
    QRCheck check;
    check.residue = r;
    check.general = mu_ordinary(data.datum, p);
    const auto module = mu_ordinary_module(data.datum, p);
    check.general_module = module_summary(module);
    check.polygon_ok = check.general == closed.polygon;
    check.module_ok =
        check.general_module == closed.module_text && module_invariants(module) == closed_inv;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace npstrata
