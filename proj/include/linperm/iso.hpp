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

#include "linperm/linpoly.hpp"
#include "linperm/matring.hpp"
#include "linperm/nbasis.hpp"

namespace linperm {

// The algebra isomorphism pair between R_m and M_m(R_{q,s}), relative to a
// dual pair of normal bases B = {alpha^{q^i}}, B' = {u^{q^j}} of F_{q^m}/F_q
// and a top frame (beta, v) with beta normal for F_{q^n}/F_{q^m}.
//
// Construction: F_{q^n} is a free module of rank m over R = F_q[tau],
// tau(y) = y^{q^m} (tau has order s, so R is F_q[x]/<x^s - 1>), with basis
// w_j = alpha^{q^{j-1}} beta.  A q-polynomial f with coefficients in F_{q^m}
// commutes with tau and is therefore R-linear; phi(f) is its matrix over R
// in the basis (w_1, ..., w_m).  This map is an algebra isomorphism:
// phi(f + g) = phi(f) + phi(g), phi(f o g) = phi(f) phi(g), phi(x) = I, and
// f permutes F_{q^n} exactly when phi(f) is invertible.
//
// A common shortcut replaces phi by the slice map that splits f into blocks
// g_i = sum_r a_{m i + r} x^{q^r} and records the matrix of each g_i on B
// as the x^i slice.  That map is additive and bijective but NOT
// multiplicative: composing blocks overflows the q-degree-below-m range and
// the overflow lands in the wrong slice (smallest counterexample: m = s = 2,
// f = a x^q with a outside F_q, where f o f sits in slice 1 while the slice
// product sits in slice 0).  The module construction above is used
// throughout instead.

/// Coefficient recovery: given values[l] = h(alpha^{q^l}) for an unknown
/// h(x) = sum a_r x^{q^r}, returns (a_0, ..., a_{m-1}) via
/// a_r = sum_l u^{q^{r+l}} values[l].
std::vector<FFElem> coeffs_from_values(const TowerCtx& ctx,
                                       const std::vector<FFElem>& values,
                                       const NormalPair& pair);

/// Matrix of f over R in the basis w_j = alpha^{q^{j-1}} beta: the x^i
/// coefficient of entry (j,k) is the F_q-coordinate of f(w_k) on
/// w_j^{q^{m i}}, computed as Tr_{n/1 -> q}(f(w_k) u^{q^{j-1}} v^{q^{m i}}).
RMatrix phi(const TowerCtx& ctx, const LinPoly& f, const NormalPair& pair);

/// psi = phi^{-1}, assembled entrywise from the psi_unit closed form.
LinPoly psi(const TowerCtx& ctx, const RMatrix& M, const NormalPair& pair);

/// Closed form of psi(O_jk c(x)) for the matrix unit O_jk (1-based j,k):
/// sum_i c_i sum_{a,r} alpha^{q^{j-1}} u^{q^{k-1+r}} T_{i-a,r} x^{q^{m a + r}}
/// with T_{b,r} = Tr_{n/m}(v^{q^r} beta^{q^{m b}}) and i - a taken mod s.
/// (T_{b,0} = delta_{b0} by duality; for r > 0 the cross terms are what the
/// slice shortcut drops.)
LinPoly psi_unit(const TowerCtx& ctx, unsigned j, unsigned k, const RPoly& c,
                 const NormalPair& pair);

/// psi(chi_jk(c)) = x + psi(O_jk c), j != k.
LinPoly psi_transvection(const TowerCtx& ctx, unsigned j, unsigned k,
                         const RPoly& c, const NormalPair& pair);

/// psi(D_l(c)) = x + psi(O_ll (c - 1)) for a unit c.
LinPoly psi_dilation(const TowerCtx& ctx, unsigned l, const RPoly& c,
                     const NormalPair& pair);

}  // namespace linperm
