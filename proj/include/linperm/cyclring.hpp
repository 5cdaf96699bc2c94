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

// An element of R_{q,s} = F_q[x]/<x^s - 1>: length-s coefficient vector,
// entries at level base_q, coefficient of x^i at index i.
using RPoly = std::vector<FFElem>;

RPoly rp_zero(const TowerCtx& ctx);
RPoly rp_one(const TowerCtx& ctx);
/// The class of x (equal to 1 when s = 1).
RPoly rp_x(const TowerCtx& ctx);
RPoly rp_from_int(const TowerCtx& ctx, u64 c);
/// Coefficients given as base-level field elements, low-to-high, length <= s.
RPoly rp_make(const TowerCtx& ctx, std::vector<FFElem> coeffs);

bool rp_is_zero(const TowerCtx& ctx, const RPoly& a);
bool rp_eq(const RPoly& a, const RPoly& b);

RPoly rp_add(const TowerCtx& ctx, const RPoly& a, const RPoly& b);
RPoly rp_sub(const TowerCtx& ctx, const RPoly& a, const RPoly& b);
RPoly rp_neg(const TowerCtx& ctx, const RPoly& a);
/// Cyclic convolution (exponents mod s).
RPoly rp_mul(const TowerCtx& ctx, const RPoly& a, const RPoly& b);
RPoly rp_scal(const TowerCtx& ctx, const FFElem& c, const RPoly& a);
RPoly rp_random(const TowerCtx& ctx, Rng& rng);

/// Value at x = 1, i.e. the coefficient sum (an element of F_q).
FFElem rp_eval_one(const TowerCtx& ctx, const RPoly& a);

/// true iff gcd(lift(a), x^s - 1) = 1 in F_q[x].
bool is_unit(const TowerCtx& ctx, const RPoly& a);
/// Inverse of a unit, via extended Euclid against x^s - 1.
RPoly rp_inv(const TowerCtx& ctx, const RPoly& a);
RPoly rp_random_unit(const TowerCtx& ctx, Rng& rng);

// ---------------------------------------------------------------------------
// Factorization x^s - 1 = prod f_j^{s_j} over F_q, by cyclotomic cosets.

struct CycloFactor {
    std::vector<FFElem> coeffs;  // monic irreducible f_j over F_q, low-to-high
    unsigned mult = 1;           // s_j
    unsigned degree = 1;         // d_j = deg f_j
};

struct CycloFactorization {
    std::vector<CycloFactor> factors;
};

CycloFactorization factor_cyclotomic(const TowerCtx& ctx);

/// |U(R_{q,s})| = prod_j (q^{d_j} - 1) q^{d_j (s_j - 1)}.
mpz_class unit_group_size(const TowerCtx& ctx, const CycloFactorization& fac);

// ---------------------------------------------------------------------------
// CRT between R_{q,s} and the local rings F_q[x]/<f_j^{s_j}>.  A residue is
// a coefficient vector of length d_j * s_j (entries at base_q).

using Residue = std::vector<FFElem>;

std::vector<Residue> crt_split(const TowerCtx& ctx, const RPoly& a,
                               const CycloFactorization& fac);
RPoly crt_join(const TowerCtx& ctx, const std::vector<Residue>& residues,
               const CycloFactorization& fac);

/// true iff the residue is a unit of its local ring (nonzero mod f_j).
bool residue_is_unit(const TowerCtx& ctx, const Residue& r,
                     const CycloFactor& f);

}  // namespace linperm
