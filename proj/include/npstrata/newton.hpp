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

#include <boost/rational.hpp>

#include "npstrata/errors.hpp"

namespace npstrata {

using Rational = boost::rational<long long>;

// A reduced rational in [0, 1].
class Slope {
 public:
  Slope() = default;
  Slope(long long num, long long den);
  explicit Slope(const Rational& r) : Slope(r.numerator(), r.denominator()) {}

  long long num() const { return value_.numerator(); }
  long long den() const { return value_.denominator(); }
  const Rational& value() const { return value_; }
  Slope dual() const { return Slope(den() - num(), den()); }
  std::string text() const;

  friend bool operator==(const Slope& x, const Slope& y) { return x.value_ == y.value_; }
  friend bool operator<(const Slope& x, const Slope& y) { return x.value_ < y.value_; }

 private:
  Rational value_{0};
};

struct Segment {
  Slope slope;
  long long multiplicity = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct NPInvariants {
  long long p_rank = 0;
  bool supersingular = false;
  bool ordinary = false;
  long long height = 0;
  Rational rise{0};
};

// Lower convex polygon given by its slopes with multiplicities. The segment
// list is kept sorted by strictly increasing slope with positive
// multiplicities; the empty list is the zero polygon.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  // Sorts, merges equal slopes and drops zero multiplicities.
  explicit NewtonPolygon(std::vector<Segment> segments);
  static NewtonPolygon pure(Slope s, long long multiplicity);
  static NewtonPolygon ord(long long k = 1);
  static NewtonPolygon ss(long long k = 1);
  // The symmetric pair (s/t, (t-s)/t), each slope with multiplicity k*t.
  static NewtonPolygon pair(long long s, long long t, long long k = 1);

  const std::vector<Segment>& segments() const { return segments_; }
  bool is_zero() const { return segments_.empty(); }
  long long height() const;
  Rational rise() const;
  long long multiplicity(const Slope& s) const;
  // Every segment with slope c/t has t dividing its multiplicity.
  bool has_integral_breakpoints() const;
  // Abscissae 0, ..., height of the segment endpoints.
  std::vector<long long> breakpoints() const;
  // Value of the polygon's graph at abscissa x in [0, height].
  Rational y_at(const Rational& x) const;
  std::vector<Rational> y_values() const;  // at x = 0..height

  // Canonical text, e.g. "ord^3 + (1/3,2/3)" or "G_{1,2} + G_{0,1}^3".
  std::string text() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<Segment> segments_;
};

NewtonPolygon merge(const NewtonPolygon& x, const NewtonPolygon& y);
NewtonPolygon reflect(const NewtonPolygon& nu);
bool is_symmetric(const NewtonPolygon& nu);
// Same endpoints, and the graph of nu is pointwise on or above that of mu.
bool lies_on_or_above(const NewtonPolygon& nu, const NewtonPolygon& mu);
NPInvariants invariants(const NewtonPolygon& nu);
NewtonPolygon scale(const NewtonPolygon& nu, long long r);

// Deterministic total order: by height, then lexicographically by the values
// at integer abscissae. Extends the lies-below partial order.
bool polygon_less(const NewtonPolygon& x, const NewtonPolygon& y);
void sort_unique(std::vector<NewtonPolygon>& set);

// Accepts the canonical text plus the alternative separators "⊕" and
// "\oplus", exponents written ^k or ^{k}, and arbitrary whitespace.
NewtonPolygon parse_polygon(const std::string& text);

std::string set_text(const std::vector<NewtonPolygon>& set);  // "{a; b}"

}  // namespace npstrata
