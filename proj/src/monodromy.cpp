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

#include "npstrata/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace npstrata {

long long mod_floor(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<int> units_mod(int m) {
  std::vector<int> out;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  if (m == 1) out.push_back(0);
  return out;
}

MonodromyDatum MonodromyDatum::make(int m, const std::vector<long long>& a) {
  return make(m, static_cast<int>(a.size()), a);
}

MonodromyDatum MonodromyDatum::make(int m, int n_points, const std::vector<long long>& a) {
  if (m < 2)
    throw DatumError(DatumError::Reason::kShape, "m must be at least 2, got " + std::to_string(m));
  if (n_points < 3)
    throw DatumError(DatumError::Reason::kShape,
                     "N must be at least 3, got " + std::to_string(n_points));
  if (static_cast<int>(a.size()) != n_points)
    throw DatumError(DatumError::Reason::kShape,
                     "N=" + std::to_string(n_points) + " but a has " + std::to_string(a.size()) +
                         " entries");
  std::vector<int> reduced;
  reduced.reserve(a.size());
  long long sum = 0;
  int g = m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int r = static_cast<int>(mod_floor(a[i], m));
    if (r == 0)
      throw DatumError(DatumError::Reason::kZeroEntry,
                       "a(" + std::to_string(i + 1) + ") = " + std::to_string(a[i]) +
                           " is 0 mod m");
    reduced.push_back(r);
    sum += r;
    g = std::gcd(g, r);
  }
  if (g != 1)
    throw DatumError(DatumError::Reason::kGcd,
                     "gcd(m, a) = " + std::to_string(g) + " != 1");
  if (sum % m != 0)
    throw DatumError(DatumError::Reason::kSum,
                     "sum of a = " + std::to_string(sum) + " is not 0 mod m");
  return MonodromyDatum(m, std::move(reduced));
}

std::string MonodromyDatum::text() const {
  std::ostringstream os;
  os << "m=" << m_ << " N=" << a_.size() << " a=";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  return os.str();
}

std::string MonodromyDatum::tuple_text() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ")";
  return os.str();
}

Residue Residue::make(int modulus, long long p) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  int v = static_cast<int>(mod_floor(p, modulus));
  if (std::gcd(v, modulus) != 1 && modulus > 1)
    throw DomainError("p = " + std::to_string(p) + " shares a factor with m = " +
                      std::to_string(modulus) + " (p does not divide m is required)");
  return Residue(modulus, v);
}

Residue Residue::reduce(int divisor) const {
  if (divisor < 1 || modulus_ % divisor != 0)
    throw DomainError(std::to_string(divisor) + " does not divide " + std::to_string(modulus_));
  return Residue(divisor, value_ % divisor);
}

int Signature::f(int n) const {
  int r = static_cast<int>(mod_floor(n, m_));
  return r == 0 ? 0 : f_[r - 1];
}

int Signature::total() const { return std::accumulate(f_.begin(), f_.end(), 0); }

MonodromyDatum validate_datum(int m, int n_points, const std::vector<long long>& a) {
  return MonodromyDatum::make(m, n_points, a);
}

int genus(const MonodromyDatum& d) {
  const int m = d.m();
  long long gsum = 0;
  for (int x : d.a()) gsum += std::gcd(x, m);
  long long twice = static_cast<long long>(d.n_points() - 2) * m - gsum;
  return static_cast<int>(1 + twice / 2);
}

Signature signature(const MonodromyDatum& d) {
  const int m = d.m();
  std::vector<int> f(m - 1);
  for (int n = 1; n < m; ++n) {
    // f(n) = -1 + sum <-n a(i) / m>, with the fractional parts summed as
    // integers over the common denominator m.
    long long num = 0;
    for (int x : d.a()) num += mod_floor(-static_cast<long long>(n) * x, m);
    f[n - 1] = static_cast<int>(num / m) - 1;
  }
  Signature sig(m, std::move(f));
  if (sig.total() != genus(d))
    throw ConsistencyError("signature of " + d.text() + " does not sum to the genus");
  return sig;
}

MonodromyDatum normalize(const MonodromyDatum& d) {
  std::vector<int> best;
  for (int u : units_mod(d.m())) {
    std::vector<int> t;
    t.reserve(d.a().size());
    for (int x : d.a()) t.push_back(static_cast<int>(static_cast<long long>(u) * x % d.m()));
    std::sort(t.begin(), t.end());
    if (best.empty() || t < best) best = std::move(t);
  }
  return MonodromyDatum::make(d.m(), std::vector<long long>(best.begin(), best.end()));
}

bool equivalent(const MonodromyDatum& x, const MonodromyDatum& y) {
  return x.m() == y.m() && x.n_points() == y.n_points() && normalize(x) == normalize(y);
}

int family_dimension(const MonodromyDatum& d) { return d.n_points() - 3; }

MonodromyDatum parse_datum(const std::string& text) {
  static const std::regex re(
      R"(^\s*m\s*=\s*(\d+)\s*(?:[,;]?\s*N\s*=\s*(\d+))?\s*[,;]?\s*a\s*=\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, re))
    throw DatumError(DatumError::Reason::kShape, "cannot parse datum '" + text + "'");
  int m = std::stoi(match[1]);
  std::vector<long long> a;
  std::string list = match[3];
  std::replace(list.begin(), list.end(), ',', ' ');
  std::istringstream is(list);
  for (long long x; is >> x;) a.push_back(x);
  int n = match[2].matched ? std::stoi(match[2]) : static_cast<int>(a.size());
  return MonodromyDatum::make(m, n, a);
}

}  // namespace npstrata
