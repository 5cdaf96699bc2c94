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

#include <set>
#include <vector>

#include "linperm/cyclring.hpp"

namespace linperm {

/// An m x m matrix over R_{q,s}.
struct RMatrix {
    std::vector<std::vector<RPoly>> e;  // e[row][col]

    bool operator==(const RMatrix&) const = default;
    unsigned dim() const { return static_cast<unsigned>(e.size()); }
};

enum class MatClass { GL, SL, Borel, Diagonal };

/// An elementary matrix: transvection chi_{j,k}(c) (identity plus c at
/// off-diagonal (j,k)) or dilation D_l(c) (identity with diagonal entry l
/// replaced by the unit c).  Indices are 1-based as in the group notation.
struct ElemFactor {
    enum class Kind { transvection, dilation } kind;
    unsigned j = 1;  // row (transvection) or l (dilation)
    unsigned k = 1;  // column (transvection only)
    RPoly c;
};

RMatrix mat_zero(const TowerCtx& ctx);
RMatrix mat_identity(const TowerCtx& ctx);
RMatrix mat_add(const TowerCtx& ctx, const RMatrix& A, const RMatrix& B);
RMatrix mat_mul(const TowerCtx& ctx, const RMatrix& A, const RMatrix& B);
RMatrix mat_random(const TowerCtx& ctx, Rng& rng);

/// chi_{j,k}(c), 1 <= j != k <= m.
RMatrix transvection(const TowerCtx& ctx, unsigned j, unsigned k, const RPoly& c);
/// D_l(c) for a unit c, 1 <= l <= m.
RMatrix dilation(const TowerCtx& ctx, unsigned l, const RPoly& c);
RMatrix elem_to_matrix(const TowerCtx& ctx, const ElemFactor& f);

/// Determinant by cofactor expansion (sound over a ring with zero divisors);
/// m <= 6.
RPoly det(const TowerCtx& ctx, const RMatrix& A);

bool is_invertible(const TowerCtx& ctx, const RMatrix& A);

/// Group memberships of A: GL (unit det), SL (det = 1), Borel (invertible
/// upper triangular), Diagonal (invertible diagonal).
std::set<MatClass> classify(const TowerCtx& ctx, const RMatrix& A);

RMatrix sample_gl(const TowerCtx& ctx, Rng& rng);
RMatrix sample_sl(const TowerCtx& ctx, Rng& rng);
RMatrix sample_borel(const TowerCtx& ctx, Rng& rng);
RMatrix sample_diag(const TowerCtx& ctx, Rng& rng);

/// Factors A into elementary matrices; the product of the returned factors,
/// left to right, equals A.  det(A) = 1 yields transvections only; otherwise
/// the list starts with the single dilation D_1(det(A)).
std::vector<ElemFactor> decompose_elementary(const TowerCtx& ctx,
                                             const RMatrix& A);

}  // namespace linperm
