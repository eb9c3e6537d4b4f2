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

#include "npstrata/errors.hpp"
#include "npstrata/monodromy.hpp"
#include "oracles.hpp"

using namespace npstrata;

namespace {

std::vector<int> ints(std::initializer_list<int> xs) { return std::vector<int>(xs); }

}  // namespace

TEST(Monodromy, ValidData) {
  auto d = validate_datum(7, 4, {2, 4, 4, 4});
  EXPECT_EQ(d.m(), 7);
  EXPECT_EQ(d.n_points(), 4);
  EXPECT_EQ(d.text(), "m=7 N=4 a=2,4,4,4");
  EXPECT_EQ(validate_datum(9, 4, {3, 5, 5, 5}).tuple_text(), "(3,5,5,5)");
}

TEST(Monodromy, EntriesAreReduced) {
  EXPECT_EQ(MonodromyDatum::make(7, {9, 11, 4, 4}).a(), ints({2, 4, 4, 4}));
  EXPECT_EQ(MonodromyDatum::make(7, {-5, 4, 4, 4}).a(), ints({2, 4, 4, 4}));
}

TEST(Monodromy, Rejections) {
  auto reason = [](int m, int N, std::vector<long long> a) {
    try {
      validate_datum(m, N, a);
    } catch (const DatumError& e) {
      return e.reason();
    }
    return DatumError::Reason::kShape;  // unreachable in these cases
  };
  EXPECT_THROW(validate_datum(7, 4, {2, 4, 4, 3}), DatumError);
  EXPECT_EQ(reason(7, 4, {2, 4, 4, 3}), DatumError::Reason::kSum);
  EXPECT_EQ(reason(7, 4, {0, 3, 4, 0}), DatumError::Reason::kZeroEntry);
  EXPECT_EQ(reason(6, 4, {2, 2, 4, 4}), DatumError::Reason::kGcd);
  EXPECT_EQ(reason(7, 3, {2, 4, 4, 4}), DatumError::Reason::kShape);
  EXPECT_THROW(validate_datum(1, 3, {1, 1, 1}), DatumError);
  EXPECT_THROW(validate_datum(5, 2, {1, 4}), DatumError);
}

TEST(Monodromy, Genus) {
  EXPECT_EQ(genus(MonodromyDatum::make(7, {2, 4, 4, 4})), 6);
  EXPECT_EQ(genus(MonodromyDatum::make(2, {1, 1, 1, 1})), 1);
  EXPECT_EQ(genus(MonodromyDatum::make(11, {1, 3, 4, 5, 9})), 15);
  EXPECT_EQ(genus(MonodromyDatum::make(9, {3, 5, 5, 5})), 7);
  EXPECT_EQ(genus(MonodromyDatum::make(12, {4, 6, 7, 7})), 7);
}

TEST(Monodromy, SignatureOfM17) {
  const auto s = signature(MonodromyDatum::make(7, {2, 4, 4, 4}));
  EXPECT_EQ(s.values(), ints({1, 2, 0, 2, 0, 1}));
  EXPECT_EQ(s.total(), 6);
  EXPECT_EQ(s.g(1), 2);
  EXPECT_EQ(s.f(8), 1);
}

TEST(Monodromy, SignatureOfM19AndM15) {
  EXPECT_EQ(signature(MonodromyDatum::make(9, {3, 5, 5, 5})).values(),
            ints({1, 2, 0, 2, 0, 1, 0, 1}));
  EXPECT_EQ(signature(MonodromyDatum::make(8, {2, 4, 5, 5})).values(),
            ints({1, 1, 0, 0, 2, 0, 1}));
}

TEST(Monodromy, SignatureSumsToGenus) {
  for (int m = 3; m <= 12; ++m)
    for (int a1 = 1; a1 < m; ++a1)
      for (int a2 = 1; a2 < m; ++a2)
        for (int a3 = 1; a3 < m; ++a3) {
          const int a4 = ((-(a1 + a2 + a3)) % m + m) % m;
          if (a4 == 0) continue;
          MonodromyDatum d = [&] {
            try {
              return MonodromyDatum::make(m, {a1, a2, a3, a4});
            } catch (const DatumError&) {
              return MonodromyDatum::make(2, {1, 1, 1, 1});
            }
          }();
          if (d.m() != m) continue;
          EXPECT_EQ(signature(d).total(), genus(d)) << d.text();
        }
}

TEST(Monodromy, NormalizeExamples) {
  // (4,4,2,4) * 2 = (1,1,4,1) mod 7.
  EXPECT_EQ(normalize(MonodromyDatum::make(7, {4, 4, 2, 4})).a(), ints({1, 1, 1, 4}));
  EXPECT_EQ(normalize(MonodromyDatum::make(2, {1, 1, 1, 1})).a(), ints({1, 1, 1, 1}));
  EXPECT_EQ(normalize(MonodromyDatum::make(5, {1, 3, 3, 3})),
            normalize(MonodromyDatum::make(5, {2, 1, 1, 1})));
  EXPECT_TRUE(equivalent(MonodromyDatum::make(7, {4, 2, 4, 4}), MonodromyDatum::make(7, {2, 4, 4, 4})));
  EXPECT_TRUE(equivalent(MonodromyDatum::make(7, {1, 1, 1, 4}), MonodromyDatum::make(7, {1, 2, 2, 2})));
  EXPECT_FALSE(equivalent(MonodromyDatum::make(7, {1, 1, 2, 3}), MonodromyDatum::make(7, {1, 2, 2, 2})));
}

TEST(Monodromy, NormalizeMatchesPermutationSearch) {
  for (int m : {5, 7, 8, 9, 10, 12})
    for (int a1 = 1; a1 < m; ++a1)
      for (int a2 = a1; a2 < m; ++a2)
        for (int a3 = a2; a3 < m; ++a3)
          for (int a4 = 1; a4 < m; ++a4) {
            if ((a1 + a2 + a3 + a4 + a4) % m) continue;
            std::vector<long long> a{a1, a4, a2, a4, a3};
            try {
              auto d = MonodromyDatum::make(m, a);
              EXPECT_EQ(normalize(d).a(), oracle::normalize_by_permutations(m, d.a())) << d.text();
            } catch (const DatumError&) {
            }
          }
}

TEST(Monodromy, FamilyDimension) {
  EXPECT_EQ(family_dimension(MonodromyDatum::make(7, {2, 4, 4, 4})), 1);
  EXPECT_EQ(family_dimension(MonodromyDatum::make(3, {1, 1, 1, 1, 2})), 2);
  EXPECT_EQ(family_dimension(MonodromyDatum::make(2, {1, 1, 1, 1, 1, 1})), 3);
}

TEST(Monodromy, ParseDatum) {
  EXPECT_EQ(parse_datum("m=7 N=4 a=2,4,4,4"), MonodromyDatum::make(7, {2, 4, 4, 4}));
  EXPECT_EQ(parse_datum("m=9, a=(3,5,5,5)"), MonodromyDatum::make(9, {3, 5, 5, 5}));
  EXPECT_THROW(parse_datum("m=7 a=2,4"), Error);
}

TEST(Monodromy, Residues) {
  EXPECT_EQ(Residue::make(7, 11).value(), 4);
  EXPECT_EQ(Residue::make(12, 23).reduce(6).value(), 5);
  EXPECT_THROW(Residue::make(9, 3), DomainError);
  EXPECT_EQ(units_mod(12), ints({1, 5, 7, 11}));
  EXPECT_EQ(mod_floor(-3, 7), 4);
}
