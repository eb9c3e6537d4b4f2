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

#include "npstrata/newton.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string_view>

namespace npstrata {

Slope::Slope(long long num, long long den) {
  if (den <= 0) throw DomainError("slope denominator must be positive");
  if (num < 0 || num > den)
    throw DomainError("slope " + std::to_string(num) + "/" + std::to_string(den) +
                      " outside [0,1]");
  value_ = Rational(num, den);
}

std::string Slope::text() const {
  if (den() == 1) return std::to_string(num());
  return std::to_string(num()) + "/" + std::to_string(den());
}

NewtonPolygon::NewtonPolygon(std::vector<Segment> segments) {
  std::map<Rational, long long> acc;
  for (const auto& s : segments) {
    if (s.multiplicity < 0) throw DomainError("negative multiplicity");
    if (s.multiplicity > 0) acc[s.slope.value()] += s.multiplicity;
  }
  for (const auto& [slope, mult] : acc) segments_.push_back({Slope(slope), mult});
}

NewtonPolygon NewtonPolygon::pure(Slope s, long long multiplicity) {
  return NewtonPolygon({{s, multiplicity}});
}

NewtonPolygon NewtonPolygon::ord(long long k) {
  return NewtonPolygon({{Slope(0, 1), k}, {Slope(1, 1), k}});
}

NewtonPolygon NewtonPolygon::ss(long long k) { return NewtonPolygon({{Slope(1, 2), 2 * k}}); }

NewtonPolygon NewtonPolygon::pair(long long s, long long t, long long k) {
  Slope lo(s, t);
  return NewtonPolygon({{lo, k * lo.den()}, {lo.dual(), k * lo.den()}});
}

long long NewtonPolygon::height() const {
  long long h = 0;
  for (const auto& s : segments_) h += s.multiplicity;
  return h;
}

Rational NewtonPolygon::rise() const {
  Rational r(0);
  for (const auto& s : segments_) r += s.slope.value() * s.multiplicity;
  return r;
}

long long NewtonPolygon::multiplicity(const Slope& slope) const {
  for (const auto& s : segments_)
    if (s.slope == slope) return s.multiplicity;
  return 0;
}

bool NewtonPolygon::has_integral_breakpoints() const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [](const Segment& s) { return s.multiplicity % s.slope.den() == 0; });
}

std::vector<long long> NewtonPolygon::breakpoints() const {
  std::vector<long long> out{0};
  long long x = 0;
  for (const auto& s : segments_) out.push_back(x += s.multiplicity);
  return out;
}

Rational NewtonPolygon::y_at(const Rational& x) const {
  Rational y(0);
  Rational left = x;
  for (const auto& s : segments_) {
    if (left <= 0) break;
    Rational run = std::min(left, Rational(s.multiplicity));
    y += run * s.slope.value();
    left -= run;
  }
  if (left > 0) throw DomainError("abscissa beyond the polygon's height");
  return y;
}

std::vector<Rational> NewtonPolygon::y_values() const {
  std::vector<Rational> out;
  Rational y(0);
  out.push_back(y);
  for (const auto& s : segments_)
    for (long long i = 0; i < s.multiplicity; ++i) out.push_back(y += s.slope.value());
  return out;
}

namespace {

std::string with_exponent(const std::string& base, long long k) {
  return k == 1 ? base : base + "^" + std::to_string(k);
}

std::string g_term(const Segment& s) {
  long long c = s.slope.num(), t = s.slope.den();
  return with_exponent("G_{" + std::to_string(c) + "," + std::to_string(t - c) + "}",
                       s.multiplicity / t);
}

}  // namespace

std::string NewtonPolygon::text() const {
  if (is_zero()) return "0";
  std::vector<std::string> terms;
  if (is_symmetric(*this) && has_integral_breakpoints()) {
    for (const auto& s : segments_) {
      if (s.slope.value() > Rational(1, 2)) break;
      long long k = s.multiplicity / s.slope.den();
      if (s.slope.num() == 0)
        terms.push_back(with_exponent("ord", k));
      else if (s.slope.value() == Rational(1, 2))
        terms.push_back(with_exponent("ss", k));
      else
        terms.push_back(with_exponent("(" + s.slope.text() + "," + s.slope.dual().text() + ")", k));
    }
  } else {
    for (const auto& s : segments_) {
      if (s.multiplicity % s.slope.den() == 0)
        terms.push_back(g_term(s));
      else
        terms.push_back("{" + s.slope.text() + " x " + std::to_string(s.multiplicity) + "}");
    }
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

NewtonPolygon merge(const NewtonPolygon& x, const NewtonPolygon& y) {
  std::vector<Segment> all = x.segments();
  all.insert(all.end(), y.segments().begin(), y.segments().end());
  return NewtonPolygon(std::move(all));
}

NewtonPolygon reflect(const NewtonPolygon& nu) {
  std::vector<Segment> out;
  for (const auto& s : nu.segments()) out.push_back({s.slope.dual(), s.multiplicity});
  return NewtonPolygon(std::move(out));
}

bool is_symmetric(const NewtonPolygon& nu) { return reflect(nu) == nu; }

bool lies_on_or_above(const NewtonPolygon& nu, const NewtonPolygon& mu) {
  if (nu.height() != mu.height() || nu.rise() != mu.rise()) return false;
  std::set<long long> xs;
  for (long long x : nu.breakpoints()) xs.insert(x);
  for (long long x : mu.breakpoints()) xs.insert(x);
  for (long long x : xs)
    if (nu.y_at(Rational(x)) < mu.y_at(Rational(x))) return false;
  return true;
}

NPInvariants invariants(const NewtonPolygon& nu) {
  NPInvariants inv;
  inv.p_rank = nu.multiplicity(Slope(0, 1));
  inv.height = nu.height();
  inv.rise = nu.rise();
  inv.supersingular = !nu.is_zero() && nu.segments().size() == 1 &&
                      nu.segments()[0].slope.value() == Rational(1, 2);
  inv.ordinary = std::all_of(nu.segments().begin(), nu.segments().end(), [](const Segment& s) {
    return s.slope.den() == 1;
  });
  return inv;
}

NewtonPolygon scale(const NewtonPolygon& nu, long long r) {
  if (r < 1) throw DomainError("scale factor must be positive");
  std::vector<Segment> out;
  for (const auto& s : nu.segments()) out.push_back({s.slope, s.multiplicity * r});
  return NewtonPolygon(std::move(out));
}

bool polygon_less(const NewtonPolygon& x, const NewtonPolygon& y) {
  if (x.height() != y.height()) return x.height() < y.height();
  return x.y_values() < y.y_values();
}

void sort_unique(std::vector<NewtonPolygon>& set) {
  std::sort(set.begin(), set.end(), polygon_less);
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

namespace {

long long parse_exponent(const std::string& s) {
  if (s.empty()) return 1;
  long long k = std::stoll(s);
  if (k < 1) throw DomainError("exponent must be positive");
  return k;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

NewtonPolygon parse_term(const std::string& term) {
  static const std::string exp = R"((?:\^\{?(\d+)\}?)?)";
  static const std::string rat = R"((\d+(?:/\d+)?))";
  static const std::regex ord_re("ord" + exp);
  static const std::regex ss_re("ss" + exp);
  static const std::regex pair_re(R"(\()" + rat + "," + rat + R"(\))" + exp);
  static const std::regex g_re(R"(G_\{?(\d+),(\d+)\}?)" + exp);
  static const std::regex raw_re(R"(\{)" + rat + R"(x(\d+)\})");
  std::smatch m;
  if (term == "0") return NewtonPolygon();
  if (std::regex_match(term, m, ord_re)) return NewtonPolygon::ord(parse_exponent(m[1]));
  if (std::regex_match(term, m, ss_re)) return NewtonPolygon::ss(parse_exponent(m[1]));
  if (std::regex_match(term, m, pair_re)) {
    Rational a = parse_rational(m[1]), b = parse_rational(m[2]);
    if (a + b != Rational(1)) throw DomainError("slope pair '" + term + "' is not dual");
    Slope lo(std::min(a, b));
    long long k = parse_exponent(m[3]);
    if (lo.value() == Rational(1, 2)) return NewtonPolygon::ss(k);
    return NewtonPolygon::pair(lo.num(), lo.den(), k);
  }
  if (std::regex_match(term, m, g_re)) {
    long long c = std::stoll(m[1]), d = std::stoll(m[2]);
    if (c + d == 0) throw DomainError("G_{0,0} is not a polygon");
    Slope s(c, c + d);
    return NewtonPolygon::pure(s, parse_exponent(m[3]) * (c + d));
  }
  if (std::regex_match(term, m, raw_re))
    return NewtonPolygon::pure(Slope(parse_rational(m[1])), std::stoll(m[2]));
  throw DomainError("cannot parse polygon term '" + term + "'");
}

}  // namespace

NewtonPolygon parse_polygon(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  for (const std::string_view sep : {std::string_view("⊕"), std::string_view("\\oplus")}) {
    for (auto pos = s.find(sep); pos != std::string::npos; pos = s.find(sep))
      s.replace(pos, sep.size(), "+");
  }
  if (s.empty()) throw DomainError("empty polygon text");
  NewtonPolygon out;
  std::size_t start = 0;
  while (true) {
    auto plus = s.find('+', start);
    std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw DomainError("empty term in polygon '" + text + "'");
    out = merge(out, parse_term(term));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

std::string set_text(const std::vector<NewtonPolygon>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "; " : "") + set[i].text();
  return out + "}";
}

}  // namespace npstrata
