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

#include <optional>
#include <string>
#include <vector>

#include "npstrata/monodromy.hpp"

namespace npstrata {

struct BasisLabel {
  int tau = 0;    // character index
  int orbit = 0;  // orbit id
  int layer = 0;  // t
  int copy = 0;
  // "e_3", "e'_3" for layer 1, with "#k" appended for copy k > 0
  std::string text() const;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// A mod p Dieudonne module of a BT1 given on a basis by partial maps F and V
// sending basis elements to basis elements or to zero.
class CombinatorialBT1 {
 public:
  static constexpr int kZero = -1;

  CombinatorialBT1() = default;
  // Checks injectivity and exactness (ker F = im V, ker V = im F).
  CombinatorialBT1(std::vector<BasisLabel> labels, std::vector<int> F, std::vector<int> V);

  // Cyclic word over {F, V}; the letter V stands for a V^-1 step. Basis
  // element i goes to i+1 under F when letter i is F, and i+1 goes to i under
  // V when letter i is V.
  static CombinatorialBT1 from_word(const std::string& word);
  static CombinatorialBT1 direct_sum(const std::vector<CombinatorialBT1>& parts);
  static CombinatorialBT1 L();
  static CombinatorialBT1 N_r1(int r);  // E/E(F^r - V^r)
  static CombinatorialBT1 N_r2(int r);  // E/E(F^{r-1} - V) + E/E(F - V^{r-1})

  int rank() const { return static_cast<int>(F_.size()); }
  int F(int b) const { return F_[b]; }
  int V(int b) const { return V_[b]; }
  const std::vector<BasisLabel>& labels() const { return labels_; }

  friend bool operator==(const CombinatorialBT1&, const CombinatorialBT1&) = default;

 private:
  std::vector<BasisLabel> labels_;
  std::vector<int> F_;
  std::vector<int> V_;
};

struct ModuleInvariants {
  int rank = 0;
  int p_rank = 0;
  int a_number = 0;
  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

struct EOType {
  std::vector<int> psi;  // psi(1..g)
  std::string text() const;  // "[1,2,3,3,4,4]"
  friend bool operator==(const EOType&, const EOType&) = default;
};

using BasisSubset = std::vector<bool>;

// A cycle of the F / V^-1 graph. A cycle whose word is the k-th power of a
// primitive word u is isomorphic to k copies of the module of u.
struct Component {
  std::vector<int> basis;  // in word order
  std::string word;        // primitive canonical rotation, letters F and V (for V^-1)
  int copies = 1;
  std::string name;        // template name or "generic"
  ModuleInvariants invariants;  // of one copy
  std::optional<EOType> eo;
};

CombinatorialBT1 mu_ordinary_module(const MonodromyDatum& d, Residue p);
ModuleInvariants module_invariants(const CombinatorialBT1& M);
// |ker F ∩ ker V|, which must agree with the a-number.
int a_number_by_kernels(const CombinatorialBT1& M);
std::vector<BasisSubset> canonical_filtration(const CombinatorialBT1& M);
EOType eo_type(const CombinatorialBT1& M);
std::vector<Component> decompose(const CombinatorialBT1& M);
// Isomorphism type as a sum of named pieces, e.g. "L^3 + N_{3,2}".
std::string summarize(const std::vector<Component>& components);
std::string module_summary(const CombinatorialBT1& M);

// "F^3V^-1FV^-1" for the raw word "FFFVFV".
std::string word_text(const std::string& word);
std::string canonical_rotation(const std::string& word);

struct FVRow {
  int tau;
  std::optional<int> F;  // tau' with F(e_tau) = e_tau'
  std::optional<int> V;
};
// The F/V table of one block of a mu-ordinary module, in orbit cycle order.
std::vector<FVRow> fv_table(const CombinatorialBT1& M, int orbit, int layer, int copy = 0);
// All blocks rendered as two-row tables.
std::string render_fv_tables(const CombinatorialBT1& M);

}  // namespace npstrata
