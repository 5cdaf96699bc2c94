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

#include <vector>

#include "linperm/fields.hpp"

namespace linperm {

inline constexpr u64 kDefaultBruteBound = 1ull << 20;

/// A linearized polynomial sum a_i x^{q^i}, i = 0..n-1, with a_i in F_{q^m}
/// (an element of the subalgebra R_m).
struct LinPoly {
    std::vector<FFElem> a;  // length n = m*s, entries at level mid_qm

    bool operator==(const LinPoly&) const = default;
};

LinPoly lp_zero(const TowerCtx& ctx);
/// The identity polynomial x.
LinPoly lp_x(const TowerCtx& ctx);
/// Coefficients low-to-high (index i = coefficient of x^{q^i}), length <= n.
LinPoly lp_make(const TowerCtx& ctx, std::vector<FFElem> coeffs);
LinPoly lp_random(const TowerCtx& ctx, Rng& rng);

bool lp_is_zero(const TowerCtx& ctx, const LinPoly& f);

FFElem lp_eval(const TowerCtx& ctx, const LinPoly& f, const FFElem& x);

LinPoly lp_add(const TowerCtx& ctx, const LinPoly& f, const LinPoly& g);
LinPoly lp_sub(const TowerCtx& ctx, const LinPoly& f, const LinPoly& g);
/// Scalar multiple by lambda in F_q.
LinPoly lp_scale(const TowerCtx& ctx, const FFElem& lambda, const LinPoly& f);
/// Composition f(g(x)); coefficient rule
/// (f o g)_k = sum_{i+j = k mod n} a_i (b_j)^{q^i}.
LinPoly lp_compose(const TowerCtx& ctx, const LinPoly& f, const LinPoly& g);

/// Block split g(x) = sum_i g_i(x^{q^{m i}}): block i position r holds
/// a_{i m + r}.  Returns s blocks of length m.
std::vector<std::vector<FFElem>> split_blocks(const TowerCtx& ctx,
                                              const LinPoly& f);
LinPoly join_blocks(const TowerCtx& ctx,
                    const std::vector<std::vector<FFElem>>& blocks);

/// Matrix over F_p of the map f on the power basis of the top field.
PMatrix lp_matrix(const TowerCtx& ctx, const LinPoly& f);

/// Kernel test: f permutes F_{q^n} iff its matrix over F_p is invertible.
bool is_permutation(const TowerCtx& ctx, const LinPoly& f);

/// Exhaustive test: evaluates f at every element of F_{q^n} and looks for
/// duplicate images.  Throws DomainError when q^n exceeds the bound.
bool is_permutation_bruteforce(const TowerCtx& ctx, const LinPoly& f,
                               u64 bound = kDefaultBruteBound);

}  // namespace linperm
