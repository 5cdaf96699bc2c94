/*
 * Copyright 2026 The linperm authors
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
#include <utility>
#include <vector>

#include "linperm/gf.hpp"

namespace linperm {

// Dense polynomials with coefficients in an arbitrary Field, low-to-high,
// trimmed (zero = empty vector).
using FPoly = std::vector<Field::Elem>;

inline int fp_deg(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

void fp_trim(const Field& F, FPoly& f);
FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b);
std::pair<FPoly, FPoly> fp_divmod(const Field& F, FPoly a, const FPoly& b);
FPoly fp_mod(const Field& F, FPoly a, const FPoly& b);
FPoly fp_monic(const Field& F, FPoly f);
FPoly fp_gcd(const Field& F, FPoly a, FPoly b);
/// g = gcd(a,b) together with s,t such that s*a + t*b = g.
struct FpExtGcd {
    FPoly g, s, t;
};
FpExtGcd fp_ext_gcd(const Field& F, FPoly a, FPoly b);
Field::Elem fp_eval(const Field& F, const FPoly& f, const Field::Elem& x);
FPoly fp_pow_mod(const Field& F, FPoly base, const mpz_class& e, const FPoly& mod);

// ---------------------------------------------------------------------------
// Linear algebra over a Field (row-major matrices of Field::Elem).

using FMatrix = std::vector<std::vector<Field::Elem>>;

unsigned mat_rank(const Field& F, FMatrix M);
/// Solves M x = rhs for square M; nullopt when singular.
std::optional<std::vector<Field::Elem>> mat_solve(const Field& F, FMatrix M,
                                                  std::vector<Field::Elem> rhs);

// ---------------------------------------------------------------------------
// A root in K of an irreducible polynomial g over F_p (deg g | deg K).
// Cantor-Zassenhaus equal-degree splitting; deterministic given the rng state.
Field::Elem root_of_irreducible(const PPoly& g, const Field& K, Rng& rng);

}  // namespace linperm
