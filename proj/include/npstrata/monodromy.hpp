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

#include <compare>
#include <string>
#include <vector>

#include "npstrata/errors.hpp"

namespace npstrata {

// A triple (m, N, a) describing a mu_m cover of the line branched at N points
// with local monodromy a. Entries are stored reduced into [1, m-1].
class MonodromyDatum {
 public:
  static MonodromyDatum make(int m, const std::vector<long long>& a);
  static MonodromyDatum make(int m, int n_points, const std::vector<long long>& a);

  int m() const { return m_; }
  int n_points() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& a() const { return a_; }

  // "m=7 N=4 a=2,4,4,4"
  std::string text() const;
  // "(2,4,4,4)"
  std::string tuple_text() const;

  friend bool operator==(const MonodromyDatum&, const MonodromyDatum&) = default;
  friend auto operator<=>(const MonodromyDatum&, const MonodromyDatum&) = default;

 private:
  MonodromyDatum(int m, std::vector<int> a) : m_(m), a_(std::move(a)) {}
  int m_;
  std::vector<int> a_;
};

// A residue class of p modulo m with gcd(p, m) = 1.
class Residue {
 public:
  static Residue make(int modulus, long long p);

  int modulus() const { return modulus_; }
  int value() const { return value_; }
  // Image in (Z/d)^* for a divisor d of the modulus.
  Residue reduce(int divisor) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue(int modulus, int value) : modulus_(modulus), value_(value) {}
  int modulus_;
  int value_;
};

// f(n) for n in 1..m-1; f(0) is defined as 0 for convenience.
class Signature {
 public:
  Signature(int m, std::vector<int> f) : m_(m), f_(std::move(f)) {}

  int m() const { return m_; }
  int f(int n) const;
  // g(n) = f(n) + f(-n)
  int g(int n) const { return f(n) + f(m_ - ((n % m_ + m_) % m_)); }
  // Values f(1), ..., f(m-1).
  const std::vector<int>& values() const { return f_; }
  int total() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int m_;
  std::vector<int> f_;
};

MonodromyDatum validate_datum(int m, int n_points, const std::vector<long long>& a);
int genus(const MonodromyDatum& d);
Signature signature(const MonodromyDatum& d);
MonodromyDatum normalize(const MonodromyDatum& d);
bool equivalent(const MonodromyDatum& x, const MonodromyDatum& y);
int family_dimension(const MonodromyDatum& d);

// Accepts "m=7 N=4 a=2,4,4,4"; N may be omitted.
MonodromyDatum parse_datum(const std::string& text);

// Units of Z/m in increasing order.
std::vector<int> units_mod(int m);
long long mod_floor(long long x, long long m);

}  // namespace npstrata
