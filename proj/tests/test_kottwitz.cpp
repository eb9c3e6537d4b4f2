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

#include <gtest/gtest.h>

#include "npstrata/kottwitz.hpp"
#include "npstrata/registry.hpp"
#include "oracles.hpp"

using namespace npstrata;

namespace {

NewtonPolygon P(const std::string& text) { return parse_polygon(text); }

const MonodromyDatum M17 = MonodromyDatum::make(7, {2, 4, 4, 4});
const MonodromyDatum M19 = MonodromyDatum::make(9, {3, 5, 5, 5});

std::vector<std::vector<int>> elements(const std::vector<CharacterOrbit>& orbits) {
  std::vector<std::vector<int>> out;
  for (const auto& o : orbits) out.push_back(o.elements);
  return out;
}

CharacterOrbit single_orbit(int m, int n, int f, int g) {
  CharacterOrbit o;
  o.m = m;
  o.p = 1;
  o.id = 0;
  o.dual_id = 1;
  o.cycle = {n};
  o.elements = {n};
  o.f = {f};
  o.order = m;
  o.g = g;
  return o;
}

}  // namespace

TEST(Kottwitz, OrbitsMod7) {
  auto orbits = orbit_decomposition(signature(M17), Residue::make(7, 2));
  EXPECT_EQ(elements(orbits), (std::vector<std::vector<int>>{{1, 2, 4}, {3, 5, 6}}));
  EXPECT_EQ(orbits[0].dual_id, 1);
  EXPECT_EQ(orbits[1].dual_id, 0);
  EXPECT_EQ(orbits[1].cycle, (std::vector<int>{3, 6, 5}));
  EXPECT_EQ(orbits[1].f, (std::vector<int>{0, 1, 0}));

  orbits = orbit_decomposition(signature(M17), Residue::make(7, 3));
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_TRUE(orbits[0].self_dual());
  EXPECT_EQ(orbits[0].cycle, (std::vector<int>{1, 3, 2, 6, 4, 5}));
}

TEST(Kottwitz, OrbitsMod9) {
  auto orbits = orbit_decomposition(signature(M19), Residue::make(9, 4));
  EXPECT_EQ(elements(orbits), (std::vector<std::vector<int>>{{1, 4, 7}, {2, 5, 8}, {3}, {6}}));
  EXPECT_EQ(orbits[2].order, 3);
  EXPECT_EQ(orbits[0].g, 2);
  EXPECT_EQ(orbits[2].g, 1);
}

TEST(Kottwitz, MuOrdinaryOrbit) {
  auto orbits = orbit_decomposition(signature(M17), Residue::make(7, 2));
  EXPECT_EQ(mu_ordinary_orbit(orbits[1]).polygon, NewtonPolygon({{Slope(0, 1), 3}, {Slope(1, 3), 3}}));
  EXPECT_EQ(mu_ordinary_orbit(orbits[0]).polygon, NewtonPolygon({{Slope(2, 3), 3}, {Slope(1, 1), 3}}));
  // singleton orbit: slope 0 with multiplicity g - f, slope 1 with f
  EXPECT_EQ(mu_ordinary_orbit(single_orbit(5, 1, 2, 3)).polygon,
            NewtonPolygon({{Slope(0, 1), 1}, {Slope(1, 1), 2}}));
}

TEST(Kottwitz, SelfDualLengthTwoOrbit) {
  // M[15], p = 7 mod 8: orbit {1,7} with f = (1,2) gives ord^2 + ss
  const auto d = MonodromyDatum::make(8, {2, 4, 5, 5});
  for (const auto& o : orbit_decomposition(signature(d), Residue::make(8, 7))) {
    if (o.elements != std::vector<int>{1, 7}) continue;
    EXPECT_TRUE(o.self_dual());
    const int f1 = std::min(o.f[0], o.f[1]), f2 = std::max(o.f[0], o.f[1]);
    EXPECT_EQ(mu_ordinary_orbit(o).polygon,
              merge(NewtonPolygon::ord(2 * f1), NewtonPolygon::ss(f2 - f1)));
  }
}

TEST(Kottwitz, MuOrdinary) {
  EXPECT_EQ(mu_ordinary(M17, Residue::make(7, 3)), P("(1/3,2/3)^2"));
  EXPECT_EQ(mu_ordinary(M19, Residue::make(9, 8)), P("ord^2 + ss^5"));
  EXPECT_EQ(mu_ordinary(MonodromyDatum::make(12, {4, 6, 7, 7}), Residue::make(12, 1)), P("ord^7"));
}

TEST(Kottwitz, AdmissibleOrbitPolygons) {
  auto orbits = orbit_decomposition(signature(M17), Residue::make(7, 2));
  EXPECT_EQ(admissible_orbit_polygons(orbits[1]),
            (std::vector<NewtonPolygon>{NewtonPolygon({{Slope(0, 1), 3}, {Slope(1, 3), 3}}),
                                        NewtonPolygon::pure(Slope(1, 6), 6)}));
  orbits = orbit_decomposition(signature(M19), Residue::make(9, 4));
  EXPECT_EQ(admissible_orbit_polygons(orbits[0]),
            (std::vector<NewtonPolygon>{P("(1/3,2/3)"), P("ss^3")}));
}

TEST(Kottwitz, SingletonOrbitWithGenusFour) {
  // Paths from (0,0) to (4,3) on or above {0, 1^3}.
  const auto o = single_orbit(3, 1, 3, 4);
  const std::vector<NewtonPolygon> expected{
      NewtonPolygon({{Slope(0, 1), 1}, {Slope(1, 1), 3}}),
      NewtonPolygon({{Slope(1, 2), 2}, {Slope(1, 1), 2}}),
      NewtonPolygon({{Slope(2, 3), 3}, {Slope(1, 1), 1}}),
      NewtonPolygon::pure(Slope(3, 4), 4),
  };
  auto got = admissible_orbit_polygons(o);
  EXPECT_EQ(got, expected);
  auto brute = oracle::orbit_polygons_brute_force(o);
  sort_unique(brute);
  EXPECT_EQ(got, brute);
}

TEST(Kottwitz, PolygonSets) {
  EXPECT_EQ(newton_polygon_set(M17, Residue::make(7, 2)),
            (std::vector<NewtonPolygon>{P("ord^3 + (1/3,2/3)"), P("(1/6,5/6)")}));
  EXPECT_EQ(newton_polygon_set(MonodromyDatum::make(3, {1, 1, 1, 1, 1, 1}), Residue::make(3, 1)),
            (std::vector<NewtonPolygon>{P("ord^4"), P("ord^2 + ss^2"), P("ord + (1/3,2/3)"),
                                        P("(1/4,3/4)")}));
  EXPECT_EQ(newton_polygon_set(MonodromyDatum::make(5, {2, 2, 2, 2, 2}), Residue::make(5, 2)),
            (std::vector<NewtonPolygon>{P("(1/4,3/4) + ss^2"), P("ss^6")}));
}

TEST(Kottwitz, BasicPolygon) {
  EXPECT_EQ(basic_polygon(M17, Residue::make(7, 3)), NewtonPolygon::ss(6));
  EXPECT_EQ(basic_polygon(MonodromyDatum::make(8, {2, 4, 5, 5}), Residue::make(8, 5)),
            P("ord + (1/4,3/4)"));
  EXPECT_EQ(basic_polygon(MonodromyDatum::make(5, {1, 3, 3, 3}), Residue::make(5, 1)),
            P("ord^2 + ss^2"));
}

TEST(Kottwitz, CongruenceClasses) {
  using C = std::vector<std::vector<int>>;
  EXPECT_EQ(congruence_classes(7), (C{{1}, {2, 4}, {3, 5}, {6}}));
  EXPECT_EQ(congruence_classes(12), (C{{1}, {5}, {7}, {11}}));
  EXPECT_EQ(congruence_classes(5), (C{{1}, {2, 3}, {4}}));
  EXPECT_EQ(congruence_classes(9), (C{{1}, {2, 5}, {4, 7}, {8}}));
  EXPECT_EQ(class_text(7, {2, 4}), "p ≡ 2,4 mod 7");
  EXPECT_EQ(class_of(Residue::make(7, 11)), (std::vector<int>{2, 4}));
}

// Every orbit of every family and residue class, against the lattice-path
// enumeration.
TEST(Kottwitz, SearchAgreesWithBruteForce) {
  int orbits_checked = 0;
  for (const auto& f : Registry::builtin().families()) {
    const auto sig = signature(f.datum);
    for (int u : units_mod(f.datum.m())) {
      for (const auto& o : orbit_decomposition(sig, Residue::make(f.datum.m(), u))) {
        auto brute = oracle::orbit_polygons_brute_force(o);
        sort_unique(brute);
        EXPECT_EQ(admissible_orbit_polygons(o), brute) << f.id << " p=" << u << " " << o.text();
        EXPECT_EQ(mu_ordinary_orbit(o).polygon, oracle::orbit_hodge_average(o)) << f.id << " " << o.text();
        ++orbits_checked;
      }
    }
  }
  EXPECT_GT(orbits_checked, 100);
}
