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

#include "linperm/iso.hpp"

namespace linperm {

// Linear PPs of F_{q^{2p}} (p an odd prime, so m = 2 and s = p) with
// prescribed coefficients f_{jki} in F_q.

struct PrescribedCoeffs {
    unsigned p = 3;  // the odd prime s
    // length-p vectors over F_q (level base_q), entry i = f_{jki}
    std::vector<FFElem> f11, f12, f21, f22;
};

void check_prescribed(const TowerCtx& ctx, const PrescribedCoeffs& c);

/// g(x) = sum_i g_i(x^{q^{2i}}) with
/// g_i(x) = [(f_12i a^q + f_22i a)u + (f_11i a^q + f_21i a)u^q] x
///        + [(f_11i a^q + f_21i a)u + (f_12i a^q + f_22i a)u^q] x^q,
/// where a = pair.alpha.
LinPoly assemble_g(const TowerCtx& ctx, const PrescribedCoeffs& c,
                   const NormalPair& pair);

/// det of the 2x2 coefficient matrix in R_{q,p}: the cyclic convolution
/// f11 * f22 - f12 * f21.
RPoly det_poly(const TowerCtx& ctx, const PrescribedCoeffs& c);

/// Exact criterion: g is a PP iff det_poly is a unit of R_{q,p}.
bool is_pp_exact(const TowerCtx& ctx, const PrescribedCoeffs& c);

/// true iff q generates the multiplicative group mod p.
bool q_primitive_mod_p(const TowerCtx& ctx, unsigned p);

enum class SufficientVerdict { PP, Inconclusive };

/// Sufficient criterion: PP when D(1) avoids {0, p * D_0}, where D_0 is the
/// constant coefficient of det_poly.  Requires q primitive mod p; when q is
/// primitive, x^p - 1 = (x - 1) Phi_p with Phi_p irreducible, so D is a
/// non-unit only when D(1) = 0 or D is a scalar multiple of Phi_p; in the
/// latter case all coefficients equal D_0 and D(1) = p * D_0.
SufficientVerdict is_pp_sufficient(const TowerCtx& ctx,
                                   const PrescribedCoeffs& c);

/// The two displayed conditions on f(x) = sum f_j x^{q^j}, implemented
/// exactly as stated: sum f_j != 0 and -(1/p) sum_{j>=1} f_j + (1-1/p) f_0
/// != 0.  A true result is the lemma's claim, not independently certified;
/// see the unit tests for a recorded counterexample.
bool corgusta_check(const TowerCtx& ctx, const std::vector<FFElem>& f,
                    unsigned p);

}  // namespace linperm
