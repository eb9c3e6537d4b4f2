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

#include <algorithm>

#include "npstrata/dieudonne.hpp"
#include "npstrata/errors.hpp"
#include "npstrata/kottwitz.hpp"
#include "oracles.hpp"

using namespace npstrata;

namespace {

const MonodromyDatum M17 = MonodromyDatum::make(7, {2, 4, 4, 4});
const MonodromyDatum M19 = MonodromyDatum::make(9, {3, 5, 5, 5});

// A printed F/V table row: tau, F image (0 for zero), V image.
struct Row {
  int tau, F, V;
};

void expect_table(const CombinatorialBT1& M, int orbit, int layer, const std::vector<Row>& rows) {
  auto table = fv_table(M, orbit, layer);
  ASSERT_EQ(table.size(), rows.size());
  for (const auto& r : rows) {
    auto it = std::find_if(table.begin(), table.end(), [&](const FVRow& x) { return x.tau == r.tau; });
    ASSERT_NE(it, table.end()) << "tau " << r.tau;
    EXPECT_EQ(it->F.value_or(0), r.F) << "F(e_" << r.tau << ")";
    EXPECT_EQ(it->V.value_or(0), r.V) << "V(e_" << r.tau << ")";
  }
}

oracle::WordModule as_words(const CombinatorialBT1& M) {
  oracle::WordModule W;
  for (int b = 0; b < M.rank(); ++b) {
    W.F.push_back(M.F(b));
    W.V.push_back(M.V(b));
  }
  return W;
}

std::vector<std::pair<std::string, int>> cycles(const CombinatorialBT1& M) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& c : decompose(M)) out.emplace_back(c.word, c.copies);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Dieudonne, BuildingBlocks) {
  EXPECT_EQ(module_invariants(CombinatorialBT1::L()), (ModuleInvariants{2, 1, 0}));
  EXPECT_EQ(module_invariants(CombinatorialBT1::N_r1(1)), (ModuleInvariants{2, 0, 1}));
  EXPECT_EQ(module_invariants(CombinatorialBT1::N_r1(4)), (ModuleInvariants{8, 0, 1}));
  EXPECT_EQ(module_invariants(CombinatorialBT1::N_r2(3)), (ModuleInvariants{6, 0, 2}));
  EXPECT_EQ(eo_type(CombinatorialBT1::N_r2(3)).psi, (std::vector<int>{0, 1, 1}));
}

TEST(Dieudonne, RejectsInexactMaps) {
  // F and V both defined on a rank-1 module with no kernel
  EXPECT_THROW(CombinatorialBT1({BasisLabel{}}, {0}, {0}), DomainError);
  // F not injective
  EXPECT_THROW(CombinatorialBT1({BasisLabel{}, BasisLabel{}}, {0, 0}, {-1, -1}), DomainError);
}

TEST(Dieudonne, CanonicalFiltrationOfSmallModules) {
  // N_{1,1}: basis x, u with F(x) = V(x) = u
  auto chain = canonical_filtration(CombinatorialBT1::N_r1(1));
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(std::count(chain[1].begin(), chain[1].end(), true), 1);
  const int u = static_cast<int>(std::find(chain[1].begin(), chain[1].end(), true) - chain[1].begin());
  const auto N11 = CombinatorialBT1::N_r1(1);
  EXPECT_EQ(N11.F(u), CombinatorialBT1::kZero);
  EXPECT_EQ(N11.V(u), CombinatorialBT1::kZero);

  // L: the multiplicative line comes first
  const auto L = CombinatorialBT1::L();
  chain = canonical_filtration(L);
  ASSERT_EQ(chain.size(), 3u);
  const int x = static_cast<int>(std::find(chain[1].begin(), chain[1].end(), true) - chain[1].begin());
  EXPECT_EQ(L.V(x), x);

  chain = canonical_filtration(CombinatorialBT1::N_r2(3));
  ASSERT_EQ(chain.size(), 7u);
  for (std::size_t i = 0; i < chain.size(); ++i)
    EXPECT_EQ(std::count(chain[i].begin(), chain[i].end(), true), static_cast<long>(i));
}

TEST(Dieudonne, EOTypesOfTemplates) {
  for (int r = 1; r <= 6; ++r) {
    std::vector<int> expected(r);
    for (int i = 0; i < r; ++i) expected[i] = i;
    EXPECT_EQ(eo_type(CombinatorialBT1::N_r1(r)).psi, expected) << "N_{" << r << ",1}";
  }
  for (int r = 2; r <= 6; ++r) {
    std::vector<int> expected;
    for (int i = 0; i <= r - 2; ++i) expected.push_back(i);
    expected.push_back(r - 2);
    EXPECT_EQ(eo_type(CombinatorialBT1::N_r2(r)).psi, expected) << "N_{" << r << ",2}";
  }
}

TEST(Dieudonne, FromWordAndCanonicalRotation) {
  const auto M = CombinatorialBT1::from_word("FFV");
  EXPECT_EQ(M.rank(), 3);
  EXPECT_EQ(canonical_rotation("VFF"), "FFV");
  EXPECT_EQ(canonical_rotation("VFVFFF"), "FFFVFV");
  EXPECT_EQ(word_text("FFFVFV"), "F^3V^-1FV^-1");
  EXPECT_EQ(word_text("FVVV"), "FV^-3");
  EXPECT_EQ(cycles(CombinatorialBT1::from_word("FFF")), (std::vector<std::pair<std::string, int>>{{"F", 3}}));
}

// The F/V tables printed for M[17], p = 2,4 mod 7. The first orbit is written
// with p = 2, the second with p = 4.
TEST(Dieudonne, M17SplitTables) {
  const auto M2 = mu_ordinary_module(M17, Residue::make(7, 2));
  expect_table(M2, 0, 0, {{1, 2, 4}, {2, 0, 0}, {4, 0, 2}});
  const auto M4 = mu_ordinary_module(M17, Residue::make(7, 4));
  expect_table(M4, 1, 1, {{3, 5, 6}, {5, 6, 0}, {6, 0, 0}});
  EXPECT_EQ(M2.rank(), 12);
  EXPECT_EQ(module_invariants(M2), (ModuleInvariants{12, 3, 2}));
  EXPECT_EQ(eo_type(M2).psi, (std::vector<int>{1, 2, 3, 3, 4, 4}));
  EXPECT_EQ(module_summary(M2), "L^3 + N_{3,2}");
  EXPECT_EQ(cycles(M2), (std::vector<std::pair<std::string, int>>{{"F", 3}, {"FFV", 1}, {"FVV", 1}, {"V", 3}}));
}

TEST(Dieudonne, M17InertTables) {
  const auto M = mu_ordinary_module(M17, Residue::make(7, 3));
  expect_table(M, 0, 0, {{1, 3, 0}, {3, 2, 0}, {2, 0, 0}, {6, 4, 2}, {4, 0, 0}, {5, 1, 4}});
  expect_table(M, 0, 1, {{1, 0, 0}, {3, 2, 1}, {2, 0, 0}, {6, 0, 2}, {4, 0, 6}, {5, 1, 4}});
  EXPECT_EQ(module_invariants(M).a_number, 4);
  EXPECT_EQ(a_number_by_kernels(M), 4);
  EXPECT_EQ(cycles(M), (std::vector<std::pair<std::string, int>>{{"FFFVFV", 1}, {"FVFVVV", 1}}));
  // Computed from the tables above; see the tables test for the printed value.
  EXPECT_EQ(eo_type(M).psi, (std::vector<int>{0, 1, 1, 2, 2, 2}));
  EXPECT_EQ(eo_type(M).psi, oracle::eo_type(as_words(M)));
}

TEST(Dieudonne, M19Tables) {
  const auto M = mu_ordinary_module(M19, Residue::make(9, 2));
  expect_table(M, 0, 0, {{1, 2, 0}, {2, 0, 0}, {4, 0, 2}, {8, 7, 4}, {7, 5, 0}, {5, 1, 0}});
  expect_table(M, 0, 1, {{1, 0, 0}, {2, 0, 1}, {4, 0, 2}, {8, 0, 4}, {7, 5, 8}, {5, 1, 0}});
  EXPECT_EQ(module_summary(M), "N_{1,1} + E/E(F^4-V^2) + E/E(F^2-V^4)");
  EXPECT_EQ(module_invariants(M).a_number, 3);
}

TEST(Dieudonne, M19OrbitEOType) {
  // restriction to the orbit {1,2,4,8,7,5}
  const auto M = mu_ordinary_module(M19, Residue::make(9, 2));
  oracle::WordModule W;
  std::vector<int> index(M.rank(), -1);
  for (int b = 0; b < M.rank(); ++b)
    if (M.labels()[b].orbit == 0) {
      index[b] = W.rank();
      W.F.push_back(0);
      W.V.push_back(0);
    }
  for (int b = 0; b < M.rank(); ++b) {
    if (index[b] < 0) continue;
    W.F[index[b]] = M.F(b) < 0 ? -1 : index[M.F(b)];
    W.V[index[b]] = M.V(b) < 0 ? -1 : index[M.V(b)];
  }
  EXPECT_EQ(oracle::eo_type(W), (std::vector<int>{0, 1, 2, 2, 3, 4}));
}

TEST(Dieudonne, Summaries) {
  EXPECT_EQ(module_summary(mu_ordinary_module(MonodromyDatum::make(5, {2, 2, 2, 2, 2}), Residue::make(5, 2))),
            "N_{2,1} + N_{4,2}");
  EXPECT_EQ(module_summary(mu_ordinary_module(M19, Residue::make(9, 4))), "L + N_{3,2}^2");
  EXPECT_EQ(module_summary(mu_ordinary_module(M19, Residue::make(9, 1))), "L^7");
  EXPECT_EQ(module_summary(CombinatorialBT1::direct_sum({CombinatorialBT1::L(), CombinatorialBT1::N_r1(1)})),
            "L + N_{1,1}");
  EXPECT_EQ(module_summary(CombinatorialBT1::from_word("F")), "L_et");
}

TEST(Dieudonne, ComponentInvariants) {
  const auto M = mu_ordinary_module(M17, Residue::make(7, 2));
  int total = 0;
  for (const auto& c : decompose(M)) {
    total += c.invariants.rank * c.copies;
    EXPECT_EQ(static_cast<int>(c.basis.size()), c.invariants.rank * c.copies);
    EXPECT_EQ(c.invariants.rank, static_cast<int>(c.word.size()));
  }
  EXPECT_EQ(total, M.rank());
}

TEST(Dieudonne, AgreesWithWordOracle) {
  for (const auto* summary : {"L^3 + N_{3,2}", "N_{2,1} + N_{4,2}", "L + N_{3,2}^2", "N_{4,2}",
                              "L^2 + N_{1,1}^5"}) {
    std::vector<oracle::WordModule> parts;
    for (const auto& w : oracle::words_of_summary(summary)) parts.push_back(oracle::module_from_word(w));
    const auto W = oracle::direct_sum(parts);
    std::vector<CombinatorialBT1> mine;
    for (const auto& w : oracle::words_of_summary(summary)) mine.push_back(CombinatorialBT1::from_word(w));
    const auto M = CombinatorialBT1::direct_sum(mine);
    EXPECT_EQ(eo_type(M).psi, oracle::eo_type(W)) << summary;
    EXPECT_EQ(module_invariants(M).p_rank, oracle::p_rank(W)) << summary;
    EXPECT_EQ(module_invariants(M).a_number, oracle::a_number(W)) << summary;
    EXPECT_EQ(module_summary(M), summary);
  }
}
