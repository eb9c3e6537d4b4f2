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

#include "npstrata/dieudonne.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "npstrata/kottwitz.hpp"

namespace npstrata {

std::string BasisLabel::text() const {
  std::string out = "e" + std::string(layer, '\'') + "_" + std::to_string(tau);
  if (copy > 0) out += "#" + std::to_string(copy);
  return out;
}

CombinatorialBT1::CombinatorialBT1(std::vector<BasisLabel> labels, std::vector<int> F,
                                   std::vector<int> V)
    : labels_(std::move(labels)), F_(std::move(F)), V_(std::move(V)) {
  const int n = static_cast<int>(F_.size());
  if (static_cast<int>(V_.size()) != n || static_cast<int>(labels_.size()) != n)
    throw DomainError("F, V and labels must have the same length");
  std::vector<int> hitF(n, 0), hitV(n, 0);
  for (int b = 0; b < n; ++b) {
    for (int img : {F_[b], V_[b]})
      if (img != kZero && (img < 0 || img >= n)) throw DomainError("image outside the basis");
    if (F_[b] != kZero && hitF[F_[b]]++) throw DomainError("F is not injective on the basis");
    if (V_[b] != kZero && hitV[V_[b]]++) throw DomainError("V is not injective on the basis");
  }
  for (int b = 0; b < n; ++b) {
    if ((F_[b] == kZero) != (hitV[b] == 1))
      throw DomainError("ker F differs from im V at " + labels_[b].text());
    if ((V_[b] == kZero) != (hitF[b] == 1))
      throw DomainError("ker V differs from im F at " + labels_[b].text());
  }
}

CombinatorialBT1 CombinatorialBT1::from_word(const std::string& word) {
  const int k = static_cast<int>(word.size());
  std::vector<int> F(k, kZero), V(k, kZero);
  std::vector<BasisLabel> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i].tau = i + 1;
    int next = (i + 1) % k;
    if (word[i] == 'F')
      F[i] = next;
    else if (word[i] == 'V')
      V[next] = i;
    else
      throw DomainError("word letters must be F or V");
  }
  return CombinatorialBT1(std::move(labels), std::move(F), std::move(V));
}

CombinatorialBT1 CombinatorialBT1::direct_sum(const std::vector<CombinatorialBT1>& parts) {
  std::vector<BasisLabel> labels;
  std::vector<int> F, V;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const int offset = static_cast<int>(F.size());
    for (int b = 0; b < parts[j].rank(); ++b) {
      BasisLabel l = parts[j].labels()[b];
      l.copy = static_cast<int>(j);
      labels.push_back(l);
      F.push_back(parts[j].F(b) == kZero ? kZero : parts[j].F(b) + offset);
      V.push_back(parts[j].V(b) == kZero ? kZero : parts[j].V(b) + offset);
    }
  }
  return CombinatorialBT1(std::move(labels), std::move(F), std::move(V));
}

CombinatorialBT1 CombinatorialBT1::L() { return direct_sum({from_word("F"), from_word("V")}); }

CombinatorialBT1 CombinatorialBT1::N_r1(int r) {
  if (r < 1) throw DomainError("N_{r,1} needs r >= 1");
  return from_word(std::string(r, 'F') + std::string(r, 'V'));
}

CombinatorialBT1 CombinatorialBT1::N_r2(int r) {
  if (r < 2) throw DomainError("N_{r,2} needs r >= 2");
  return direct_sum({from_word(std::string(r - 1, 'F') + "V"),
                     from_word("F" + std::string(r - 1, 'V'))});
}

std::string EOType::text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < psi.size(); ++i) out += (i ? "," : "") + std::to_string(psi[i]);
  return out + "]";
}

CombinatorialBT1 mu_ordinary_module(const MonodromyDatum& d, Residue p) {
  std::vector<BasisLabel> labels;
  std::vector<int> F, V;
  for (const auto& o : orbit_decomposition(signature(d), p)) {
    if (o.g == 0) continue;
    const auto data = mu_ordinary_orbit(o);
    const int len = o.length();
    for (int t = 0; t <= data.s; ++t) {
      const int bound = data.E[t + 1];
      for (int c = 0; c < data.E[t] - bound; ++c) {
        const int offset = static_cast<int>(labels.size());
        for (int i = 0; i < len; ++i) labels.push_back({o.cycle[i], o.id, t, c});
        F.resize(offset + len, CombinatorialBT1::kZero);
        V.resize(offset + len, CombinatorialBT1::kZero);
        // cycle[i+1] = p * cycle[i]
        for (int i = 0; i < len; ++i) {
          const int next = offset + (i + 1) % len;
          if (o.f[i] <= bound)
            F[offset + i] = next;
          else
            V[next] = offset + i;
        }
      }
    }
  }
  CombinatorialBT1 M(std::move(labels), std::move(F), std::move(V));
  if (M.rank() != 2 * genus(d))
    throw ConsistencyError("mu-ordinary module of " + d.text() + " has rank " +
                           std::to_string(M.rank()));
  return M;
}

ModuleInvariants module_invariants(const CombinatorialBT1& M) {
  ModuleInvariants inv;
  const int n = M.rank();
  inv.rank = n;
  for (int b = 0; b < n; ++b) {
    int x = M.F(b);
    for (int steps = 0; x != CombinatorialBT1::kZero && x != b && steps < n; ++steps) x = M.F(x);
    if (x == b) ++inv.p_rank;
  }
  std::vector<bool> image(n, false);
  for (int b = 0; b < n; ++b) {
    if (M.F(b) != CombinatorialBT1::kZero) image[M.F(b)] = true;
    if (M.V(b) != CombinatorialBT1::kZero) image[M.V(b)] = true;
  }
  inv.a_number = n - static_cast<int>(std::count(image.begin(), image.end(), true));
  return inv;
}

int a_number_by_kernels(const CombinatorialBT1& M) {
  int count = 0;
  for (int b = 0; b < M.rank(); ++b)
    if (M.F(b) == CombinatorialBT1::kZero && M.V(b) == CombinatorialBT1::kZero) ++count;
  return count;
}

namespace {

BasisSubset apply_V(const CombinatorialBT1& M, const BasisSubset& W) {
  BasisSubset out(M.rank(), false);
  for (int b = 0; b < M.rank(); ++b)
    if (W[b] && M.V(b) != CombinatorialBT1::kZero) out[M.V(b)] = true;
  return out;
}

BasisSubset preimage_F(const CombinatorialBT1& M, const BasisSubset& W) {
  BasisSubset out(M.rank(), false);
  for (int b = 0; b < M.rank(); ++b) out[b] = M.F(b) == CombinatorialBT1::kZero || W[M.F(b)];
  return out;
}

int size_of(const BasisSubset& W) { return static_cast<int>(std::count(W.begin(), W.end(), true)); }

bool contained(const BasisSubset& x, const BasisSubset& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] && !y[i]) return false;
  return true;
}

}  // namespace

std::vector<BasisSubset> canonical_filtration(const CombinatorialBT1& M) {
  const int n = M.rank();
  std::set<BasisSubset> seen{BasisSubset(n, false), BasisSubset(n, true)};
  std::vector<BasisSubset> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    BasisSubset W = std::move(queue.back());
    queue.pop_back();
    for (auto next : {apply_V(M, W), preimage_F(M, W)})
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  std::vector<BasisSubset> chain(seen.begin(), seen.end());
  std::sort(chain.begin(), chain.end(), [](const BasisSubset& x, const BasisSubset& y) {
    return size_of(x) < size_of(y);
  });
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (size_of(chain[i - 1]) == size_of(chain[i]) || !contained(chain[i - 1], chain[i]))
      throw ConsistencyError("canonical filtration is not totally ordered");
  return chain;
}

EOType eo_type(const CombinatorialBT1& M) {
  if (M.rank() % 2 != 0) throw DomainError("EO type needs even rank");
  const int g = M.rank() / 2;
  std::vector<int> psi(M.rank() + 1, 0);
  const auto chain = canonical_filtration(M);
  int prev_dim = 0, prev_psi = 0;
  for (const auto& C : chain) {
    const int dim = size_of(C);
    const int value = size_of(apply_V(M, C));
    if (dim == 0) continue;
    const int gap = dim - prev_dim, rise = value - prev_psi;
    if (rise != 0 && rise != gap)
      throw ConsistencyError("canonical step of dimension " + std::to_string(dim) +
                             " does not interpolate with slope 0 or 1");
    for (int i = prev_dim + 1; i <= dim; ++i) psi[i] = prev_psi + (rise == 0 ? 0 : i - prev_dim);
    prev_dim = dim;
    prev_psi = value;
  }
  return EOType{std::vector<int>(psi.begin() + 1, psi.begin() + 1 + g)};
}

std::string canonical_rotation(const std::string& word) {
  std::string best = word;
  for (std::size_t i = 1; i < word.size(); ++i) {
    std::string rot = word.substr(i) + word.substr(0, i);
    if (rot < best) best = rot;
  }
  return best;
}

std::string word_text(const std::string& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const std::size_t run = j - i;
    if (word[i] == 'F')
      out += run == 1 ? "F" : "F^" + std::to_string(run);
    else
      out += "V^-" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace {

// Run lengths of a canonical word; a single run pair F^a V^b gives {a, b}.
std::vector<std::pair<char, int>> runs(const std::string& word) {
  std::vector<std::pair<char, int>> out;
  for (char c : word) {
    if (!out.empty() && out.back().first == c)
      ++out.back().second;
    else
      out.push_back({c, 1});
  }
  return out;
}

std::string template_name(const std::string& word) {
  if (word == "F") return "L (etale part)";
  if (word == "V") return "L (multiplicative part)";
  const auto r = runs(word);
  if (r.size() == 2) {
    const int a = r[0].second, b = r[1].second;
    if (a == b) return "N_{" + std::to_string(a) + ",1}";
    if (b == 1 && a >= 2) return "N_{" + std::to_string(a + 1) + ",2} (F-part)";
    if (a == 1 && b >= 2) return "N_{" + std::to_string(b + 1) + ",2} (V-part)";
  }
  return "generic";
}

std::string single_run_text(int a, int b) {
  auto power = [](const char* x, int k) {
    return k == 1 ? std::string(x) : std::string(x) + "^" + std::to_string(k);
  };
  return "E/E(" + power("F", a) + "-" + power("V", b) + ")";
}

std::string with_exponent(const std::string& base, int k) {
  return k == 1 ? base : base + "^" + std::to_string(k);
}

}  // namespace

std::vector<Component> decompose(const CombinatorialBT1& M) {
  const int n = M.rank();
  std::vector<int> inverse_V(n, CombinatorialBT1::kZero);
  for (int b = 0; b < n; ++b)
    if (M.V(b) != CombinatorialBT1::kZero) inverse_V[M.V(b)] = b;
  std::vector<bool> done(n, false);
  std::vector<Component> out;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<int> cycle;
    std::string word;
    for (int b = start; !done[b];) {
      done[b] = true;
      cycle.push_back(b);
      if (M.F(b) != CombinatorialBT1::kZero) {
        word += 'F';
        b = M.F(b);
      } else {
        word += 'V';
        b = inverse_V[b];
      }
    }
    // Rotate the cycle to the canonical word's starting point.
    std::size_t shift = 0;
    const std::string canon = canonical_rotation(word);
    for (std::size_t i = 0; i < word.size(); ++i)
      if (word.substr(i) + word.substr(0, i) == canon) {
        shift = i;
        break;
      }
    std::rotate(cycle.begin(), cycle.begin() + shift, cycle.end());
    std::size_t period = 1;
    while (canon.size() % period != 0 ||
           canon.substr(period) + canon.substr(0, period) != canon)
      ++period;
    Component c;
    c.basis = std::move(cycle);
    c.word = canon.substr(0, period);
    c.copies = static_cast<int>(canon.size() / period);
    c.name = template_name(c.word);
    const auto piece = CombinatorialBT1::from_word(c.word);
    c.invariants = module_invariants(piece);
    if (piece.rank() % 2 == 0) c.eo = eo_type(piece);
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Component& x, const Component& y) { return x.word < y.word; });
  return out;
}

std::string summarize(const std::vector<Component>& components) {
  int etale = 0, mult = 0;
  std::map<int, int> n1;
  std::map<int, int> n2_f, n2_v;
  std::map<std::string, int> single, generic;
  for (const auto& c : components) {
    const auto r = runs(c.word);
    const int k = c.copies;
    if (c.word == "F") {
      etale += k;
    } else if (c.word == "V") {
      mult += k;
    } else if (r.size() == 2 && r[0].second == r[1].second) {
      n1[r[0].second] += k;
    } else if (r.size() == 2 && r[1].second == 1 && r[0].second >= 2) {
      n2_f[r[0].second + 1] += k;
    } else if (r.size() == 2 && r[0].second == 1 && r[1].second >= 2) {
      n2_v[r[1].second + 1] += k;
    } else if (r.size() == 2) {
      single[c.word] += k;
    } else {
      generic[c.word] += k;
    }
  }
  std::vector<std::string> terms;
  const int pairs = std::min(etale, mult);
  if (pairs) terms.push_back(with_exponent("L", pairs));
  if (etale > pairs) terms.push_back(with_exponent("L_et", etale - pairs));
  if (mult > pairs) terms.push_back(with_exponent("L_mult", mult - pairs));
  for (const auto& [r, k] : n1) terms.push_back(with_exponent("N_{" + std::to_string(r) + ",1}", k));
  std::set<int> ranks;
  for (const auto& [r, _] : n2_f) ranks.insert(r);
  for (const auto& [r, _] : n2_v) ranks.insert(r);
  for (int r : ranks) {
    const int f = n2_f.count(r) ? n2_f[r] : 0, v = n2_v.count(r) ? n2_v[r] : 0;
    const int both = std::min(f, v);
    if (both) terms.push_back(with_exponent("N_{" + std::to_string(r) + ",2}", both));
    // Unpaired halves are reported as the single-run pieces they are.
    if (f > both) single[std::string(r - 1, 'F') + "V"] += f - both;
    if (v > both) single["F" + std::string(r - 1, 'V')] += v - both;
  }
  for (const auto& [w, k] : single) {
    const auto r = runs(w);
    terms.push_back(with_exponent(single_run_text(r[0].second, r[1].second), k));
  }
  for (const auto& [w, k] : generic) terms.push_back(with_exponent("<" + word_text(w) + ">", k));
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

std::string module_summary(const CombinatorialBT1& M) { return summarize(decompose(M)); }

std::vector<FVRow> fv_table(const CombinatorialBT1& M, int orbit, int layer, int copy) {
  std::vector<FVRow> rows;
  for (int b = 0; b < M.rank(); ++b) {
    const auto& l = M.labels()[b];
    if (l.orbit != orbit || l.layer != layer || l.copy != copy) continue;
    FVRow row{l.tau, std::nullopt, std::nullopt};
    if (M.F(b) != CombinatorialBT1::kZero) row.F = M.labels()[M.F(b)].tau;
    if (M.V(b) != CombinatorialBT1::kZero) row.V = M.labels()[M.V(b)].tau;
    rows.push_back(row);
  }
  return rows;
}

std::string render_fv_tables(const CombinatorialBT1& M) {
  std::ostringstream os;
  std::vector<std::tuple<int, int, int>> blocks;
  for (const auto& l : M.labels()) {
    auto key = std::make_tuple(l.orbit, l.layer, l.copy);
    if (std::find(blocks.begin(), blocks.end(), key) == blocks.end()) blocks.push_back(key);
  }
  for (const auto& [orbit, layer, copy] : blocks) {
    std::vector<int> members;
    for (int b = 0; b < M.rank(); ++b) {
      const auto& l = M.labels()[b];
      if (l.orbit == orbit && l.layer == layer && l.copy == copy) members.push_back(b);
    }
    auto cell = [&](int img) { return img == CombinatorialBT1::kZero ? std::string("0") : M.labels()[img].text(); };
    os << "orbit " << orbit << ", t=" << layer;
    if (copy > 0) os << ", copy " << copy;
    os << "\n   ";
    for (int b : members) os << "\t" << M.labels()[b].text();
    os << "\n  F";
    for (int b : members) os << "\t" << cell(M.F(b));
    os << "\n  V";
    for (int b : members) os << "\t" << cell(M.V(b));
    os << "\n";
  }
  return os.str();
}

}  // namespace npstrata
