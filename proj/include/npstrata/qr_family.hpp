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

#include "npstrata/dieudonne.hpp"
#include "npstrata/monodromy.hpp"
#include "npstrata/newton.hpp"

namespace npstrata {

// The family whose inertia type is the set of quadratic residues modulo a
// prime m = 3 mod 4.
struct QRFamilyData {
  int m = 0;
  MonodromyDatum datum;
  int c1 = 0;  // f(n) for n a quadratic residue
  int c2 = 0;  // f(n) for n a non-residue
  int E1 = 0;  // max(c1, c2)
  int E2 = 0;  // min(c1, c2)
  long long genus = 0;
  // Smallest p for which the p-rank result used for occurrence applies;
  // reported only.
  long long p_bound = 0;
};

struct QRClosedForm {
  NewtonPolygon polygon;       // (ord^{2 E2} + ss^{E1 - E2})^{(m-1)/2}
  CombinatorialBT1 module;     // (L^{2 E2} + N_{1,1}^{E1 - E2})^{(m-1)/2}
  std::string module_text;
  long long half_multiplicity = 0;  // multiplicity of slope 1/2
};

struct QRCheck {
  int residue = 0;
  NewtonPolygon general;
  std::string general_module;
  bool polygon_ok = false;
  bool module_ok = false;
};

bool is_prime(long long n);
bool is_quadratic_residue(long long n, int m);

QRFamilyData qr_datum(int m);
QRClosedForm qr_mu_ordinary_closed_form(int m);
// Runs the general mu-ordinary pipeline at every non-residue class and
// compares with the closed form.
std::vector<QRCheck> qr_cross_check(int m);

}  // namespace npstrata
