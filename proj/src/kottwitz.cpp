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

#include "npstrata/kottwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace npstrata {

int CharacterOrbit::f_sum() const { return std::accumulate(f.begin(), f.end(), 0); }

int CharacterOrbit::f_of(int n) const {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == n) return f[i];
  throw DomainError(std::to_string(n) + " is not in orbit " + text());
}

std::string CharacterOrbit::text() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i)
    out += (i ? "," : "") + std::to_string(elements[i]);
  return out + "}";
}

std::vector<CharacterOrbit> orbit_decomposition(const Signature& sig, Residue p) {
  const int m = sig.m();
  if (p.modulus() != m) p = Residue::make(m, p.value());
  std::vector<int> owner(m, -1);
  std::vector<CharacterOrbit> orbits;
  for (int n = 1; n < m; ++n) {
    if (owner[n] >= 0) continue;
    CharacterOrbit o;
    o.m = m;
    o.p = p.value();
    o.id = static_cast<int>(orbits.size());
    int x = n;
    do {
      owner[x] = o.id;
      o.cycle.push_back(x);
      o.f.push_back(sig.f(x));
      x = static_cast<int>(static_cast<long long>(x) * p.value() % m);
    } while (x != n);
    o.elements = o.cycle;
    std::sort(o.elements.begin(), o.elements.end());
    o.order = m / std::gcd(n, m);
    o.g = sig.g(n);
    for (int y : o.cycle)
      if (sig.g(y) != o.g)
        throw ConsistencyError("f(n)+f(-n) is not constant on orbit of " + std::to_string(n));
    orbits.push_back(std::move(o));
  }
  for (auto& o : orbits) o.dual_id = owner[m - o.cycle.front()];
  return orbits;
}

MuOrdinaryOrbitData mu_ordinary_orbit(const CharacterOrbit& o) {
  MuOrdinaryOrbitData out;
  if (o.g == 0) {
    out.E = {0};
    return out;
  }
  std::set<int, std::greater<>> inner;
  for (int v : o.f)
    if (v >= 1 && v <= o.g - 1) inner.insert(v);
  out.s = static_cast<int>(inner.size());
  out.E.push_back(o.g);
  out.E.insert(out.E.end(), inner.begin(), inner.end());
  out.E.push_back(0);
  const long long len = o.length();
  long long count = 0;
  std::vector<Segment> segments;
  for (int t = 0; t <= out.s; ++t) {
    count += std::count(o.f.begin(), o.f.end(), out.E[t]);
    Rational slope(count, len);
    long long mult = len * (out.E[t] - out.E[t + 1]);
    out.slopes.push_back(slope);
    out.multiplicities.push_back(mult);
    segments.push_back({Slope(slope), mult});
  }
  out.polygon = NewtonPolygon(segments);
  if (out.polygon.height() != len * o.g || out.polygon.rise() != Rational(o.f_sum()))
    throw ConsistencyError("mu-ordinary polygon of orbit " + o.text() + " has wrong endpoint");
  return out;
}

NewtonPolygon mu_ordinary(const MonodromyDatum& d, Residue p) {
  NewtonPolygon nu;
  for (const auto& o : orbit_decomposition(signature(d), p))
    nu = merge(nu, mu_ordinary_orbit(o).polygon);
  return nu;
}

namespace {

struct PathSearch {
  long long height, rise, step;
  NewtonPolygon mu;
  std::vector<Segment> path;
  std::vector<NewtonPolygon> found;

  void run(long long x, long long y, Rational last) {
    if (x == height) {
      if (y == rise) found.emplace_back(path);
      return;
    }
    for (long long len = step; x + len <= height; len += step) {
      for (long long r = 0; r <= len; ++r) {
        Rational slope(r, len);
        if (!path.empty() && slope <= last) continue;
        long long nx = x + len, ny = y + r;
        if (ny > rise) break;
        // Later runs are steeper than this one but at most 1.
        long long rest = height - nx, rest_rise = rise - ny;
        if (rest_rise > rest) continue;
        if (rest > 0 && Rational(rest_rise) <= slope * rest) break;
        if (rest == 0 && rest_rise != 0) continue;
        if (Rational(ny) < mu.y_at(Rational(nx))) continue;
        path.push_back({Slope(slope), len});
        run(nx, ny, slope);
        path.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<NewtonPolygon> admissible_orbit_polygons(const CharacterOrbit& o) {
  if (o.g == 0) return {NewtonPolygon()};
  PathSearch search;
  search.step = o.length();
  search.height = static_cast<long long>(o.length()) * o.g;
  search.rise = o.f_sum();
  search.mu = mu_ordinary_orbit(o).polygon;
  search.run(0, 0, Rational(0));
  std::vector<NewtonPolygon> out;
  for (auto& nu : search.found)
    if (!o.self_dual() || is_symmetric(nu)) out.push_back(std::move(nu));
  sort_unique(out);
  return out;
}

namespace {

void check_extremes(const std::vector<NewtonPolygon>& set, const NewtonPolygon& lowest,
                    const NewtonPolygon& highest, const std::string& what) {
  if (std::find(set.begin(), set.end(), lowest) == set.end() ||
      std::find(set.begin(), set.end(), highest) == set.end())
    throw ConsistencyError(what + ": extremal polygon missing from the set");
  for (const auto& nu : set) {
    if (!lies_on_or_above(nu, lowest))
      throw ConsistencyError(what + ": " + nu.text() + " lies below " + lowest.text());
    if (!lies_on_or_above(highest, nu))
      throw ConsistencyError(what + ": " + nu.text() + " lies above " + highest.text());
  }
}

std::vector<NewtonPolygon> orbit_choices(const CharacterOrbit& o) {
  auto polys = admissible_orbit_polygons(o);
  if (o.self_dual()) return polys;
  std::vector<NewtonPolygon> out;
  for (const auto& nu : polys) out.push_back(merge(nu, reflect(nu)));
  return out;
}

// Orbits that contribute independently: every self-dual orbit, and the
// member of each dual pair with the smaller least element.
std::vector<CharacterOrbit> representatives(const MonodromyDatum& d, Residue p) {
  std::vector<CharacterOrbit> out;
  for (auto& o : orbit_decomposition(signature(d), p))
    if (o.id <= o.dual_id) out.push_back(std::move(o));
  return out;
}

}  // namespace

std::vector<NewtonPolygon> newton_polygon_set(const MonodromyDatum& d, Residue p) {
  std::vector<NewtonPolygon> acc{NewtonPolygon()};
  for (const auto& o : representatives(d, p)) {
    std::vector<NewtonPolygon> next;
    for (const auto& choice : orbit_choices(o))
      for (const auto& partial : acc) next.push_back(merge(partial, choice));
    sort_unique(next);
    acc = std::move(next);
  }
  const long long g = genus(d);
  for (const auto& nu : acc)
    if (!is_symmetric(nu) || !nu.has_integral_breakpoints() || nu.height() != 2 * g)
      throw ConsistencyError("polygon " + nu.text() + " for " + d.text() +
                             " is not a symmetric height-2g polygon");
  check_extremes(acc, acc.front(), acc.back(), d.text());
  if (acc.front() != mu_ordinary(d, p))
    throw ConsistencyError("lowest polygon for " + d.text() + " is not the mu-ordinary one");
  return acc;
}

NewtonPolygon basic_polygon(const MonodromyDatum& d, Residue p) {
  NewtonPolygon nu;
  for (const auto& o : representatives(d, p)) {
    auto choices = orbit_choices(o);
    const NewtonPolygon& top = choices.back();
    for (const auto& c : choices)
      if (!lies_on_or_above(top, c))
        throw ConsistencyError("orbit " + o.text() + " has no unique maximal polygon");
    nu = merge(nu, top);
  }
  auto set = newton_polygon_set(d, p);
  if (set.back() != nu)
    throw ConsistencyError("basic polygon of " + d.text() + " is not the maximum of its set");
  return nu;
}

std::vector<std::vector<int>> congruence_classes(int m) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  std::map<std::vector<int>, std::vector<int>> by_subgroup;
  for (int u : units_mod(m)) {
    std::vector<int> powers;
    int x = 1;
    do {
      powers.push_back(x);
      x = static_cast<int>(static_cast<long long>(x) * u % m);
    } while (x != 1 % m);
    std::sort(powers.begin(), powers.end());
    by_subgroup[powers].push_back(u);
  }
  std::vector<std::vector<int>> out;
  for (auto& [_, cls] : by_subgroup) out.push_back(cls);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> class_of(Residue p) {
  for (auto& cls : congruence_classes(p.modulus()))
    if (std::find(cls.begin(), cls.end(), p.value()) != cls.end()) return cls;
  throw DomainError("residue is not a unit");
}

std::string class_text(int m, const std::vector<int>& cls) {
  std::string out = "p ≡ ";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + std::to_string(cls[i]);
  return out + " mod " + std::to_string(m);
}

}  // namespace npstrata
