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

#include "linperm/matring.hpp"

#include <map>

namespace linperm {

namespace {

constexpr unsigned kDetDimBound = 6;

void check_matrix(const TowerCtx& ctx, const RMatrix& A) {
    if (A.dim() != ctx.m()) throw DomainError("RMatrix dimension != m");
    for (const auto& row : A.e) {
        if (row.size() != ctx.m()) throw DomainError("RMatrix is not square");
        for (const auto& entry : row)
            if (entry.size() != ctx.s())
                throw DomainError("RMatrix entry has wrong length");
    }
}

RPoly det_rec(const TowerCtx& ctx, const std::vector<std::vector<RPoly>>& M) {
    const size_t m = M.size();
    if (m == 1) return M[0][0];
    RPoly acc = rp_zero(ctx);
    for (size_t j = 0; j < m; ++j) {
        if (rp_is_zero(ctx, M[0][j])) continue;
        std::vector<std::vector<RPoly>> minor(m - 1);
        for (size_t r = 1; r < m; ++r)
            for (size_t c = 0; c < m; ++c)
                if (c != j) minor[r - 1].push_back(M[r][c]);
        RPoly term = rp_mul(ctx, M[0][j], det_rec(ctx, minor));
        acc = j % 2 == 0 ? rp_add(ctx, acc, term) : rp_sub(ctx, acc, term);
    }
    return acc;
}

bool upper_triangular(const TowerCtx& ctx, const RMatrix& A) {
    for (unsigned r = 1; r < A.dim(); ++r)
        for (unsigned c = 0; c < r; ++c)
            if (!rp_is_zero(ctx, A.e[r][c])) return false;
    return true;
}

bool diagonal(const TowerCtx& ctx, const RMatrix& A) {
    for (unsigned r = 0; r < A.dim(); ++r)
        for (unsigned c = 0; c < A.dim(); ++c)
            if (r != c && !rp_is_zero(ctx, A.e[r][c])) return false;
    return true;
}

}  // namespace

RMatrix mat_zero(const TowerCtx& ctx) {
    RMatrix A;
    A.e.assign(ctx.m(), std::vector<RPoly>(ctx.m(), rp_zero(ctx)));
    return A;
}

RMatrix mat_identity(const TowerCtx& ctx) {
    RMatrix A = mat_zero(ctx);
    for (unsigned i = 0; i < ctx.m(); ++i) A.e[i][i] = rp_one(ctx);
    return A;
}

RMatrix mat_add(const TowerCtx& ctx, const RMatrix& A, const RMatrix& B) {
    check_matrix(ctx, A);
    check_matrix(ctx, B);
    RMatrix R = mat_zero(ctx);
    for (unsigned r = 0; r < ctx.m(); ++r)
        for (unsigned c = 0; c < ctx.m(); ++c)
            R.e[r][c] = rp_add(ctx, A.e[r][c], B.e[r][c]);
    return R;
}

RMatrix mat_mul(const TowerCtx& ctx, const RMatrix& A, const RMatrix& B) {
    check_matrix(ctx, A);
    check_matrix(ctx, B);
    RMatrix R = mat_zero(ctx);
    for (unsigned r = 0; r < ctx.m(); ++r)
        for (unsigned k = 0; k < ctx.m(); ++k) {
            if (rp_is_zero(ctx, A.e[r][k])) continue;
            for (unsigned c = 0; c < ctx.m(); ++c)
                R.e[r][c] =
                    rp_add(ctx, R.e[r][c], rp_mul(ctx, A.e[r][k], B.e[k][c]));
        }
    return R;
}

RMatrix mat_random(const TowerCtx& ctx, Rng& rng) {
    RMatrix A = mat_zero(ctx);
    for (auto& row : A.e)
        for (auto& entry : row) entry = rp_random(ctx, rng);
    return A;
}

RMatrix transvection(const TowerCtx& ctx, unsigned j, unsigned k, const RPoly& c) {
    if (j < 1 || j > ctx.m() || k < 1 || k > ctx.m() || j == k)
        throw DomainError("transvection: need 1 <= j != k <= m");
    RMatrix A = mat_identity(ctx);
    A.e[j - 1][k - 1] = c;
    return A;
}

RMatrix dilation(const TowerCtx& ctx, unsigned l, const RPoly& c) {
    if (l < 1 || l > ctx.m()) throw DomainError("dilation: need 1 <= l <= m");
    if (!is_unit(ctx, c)) throw DomainError("dilation: c must be a unit");
    RMatrix A = mat_identity(ctx);
    A.e[l - 1][l - 1] = c;
    return A;
}

RMatrix elem_to_matrix(const TowerCtx& ctx, const ElemFactor& f) {
    return f.kind == ElemFactor::Kind::transvection
               ? transvection(ctx, f.j, f.k, f.c)
               : dilation(ctx, f.j, f.c);
}

RPoly det(const TowerCtx& ctx, const RMatrix& A) {
    check_matrix(ctx, A);
    if (A.dim() > kDetDimBound)
        throw DomainError("det: cofactor expansion supports m <= 6");
    return det_rec(ctx, A.e);
}

bool is_invertible(const TowerCtx& ctx, const RMatrix& A) {
    return is_unit(ctx, det(ctx, A));
}

std::set<MatClass> classify(const TowerCtx& ctx, const RMatrix& A) {
    std::set<MatClass> tags;
    const RPoly d = det(ctx, A);
    if (!is_unit(ctx, d)) return tags;
    tags.insert(MatClass::GL);
    if (rp_eq(d, rp_one(ctx))) tags.insert(MatClass::SL);
    if (upper_triangular(ctx, A)) tags.insert(MatClass::Borel);
    if (diagonal(ctx, A)) tags.insert(MatClass::Diagonal);
    return tags;
}

RMatrix sample_gl(const TowerCtx& ctx, Rng& rng) {
    for (unsigned att = 0; att < 100000; ++att) {
        RMatrix A = mat_random(ctx, rng);
        if (is_invertible(ctx, A)) return A;
    }
    throw SearchExhausted("sample_gl: attempt bound reached");
}

RMatrix sample_sl(const TowerCtx& ctx, Rng& rng) {
    RMatrix A = sample_gl(ctx, rng);
    const RPoly d = det(ctx, A);
    return mat_mul(ctx, dilation(ctx, 1, rp_inv(ctx, d)), A);
}

RMatrix sample_borel(const TowerCtx& ctx, Rng& rng) {
    RMatrix A = mat_zero(ctx);
    for (unsigned r = 0; r < ctx.m(); ++r) {
        A.e[r][r] = rp_random_unit(ctx, rng);
        for (unsigned c = r + 1; c < ctx.m(); ++c) A.e[r][c] = rp_random(ctx, rng);
    }
    return A;
}

RMatrix sample_diag(const TowerCtx& ctx, Rng& rng) {
    RMatrix A = mat_zero(ctx);
    for (unsigned r = 0; r < ctx.m(); ++r) A.e[r][r] = rp_random_unit(ctx, rng);
    return A;
}

std::vector<ElemFactor> decompose_elementary(const TowerCtx& ctx,
                                             const RMatrix& A) {
    check_matrix(ctx, A);
    const unsigned m = ctx.m();
    const RPoly d = det(ctx, A);
    if (!is_unit(ctx, d)) throw DomainError("decompose_elementary: singular input");

    const CycloFactorization fac = factor_cyclotomic(ctx);
    const size_t ncomp = fac.factors.size();

    // Unit iff nonzero mod f_j (non-units of the local ring form <f_j>).
    auto unit_in = [&](const RPoly& a, size_t comp) {
        const auto residues = crt_split(ctx, a, fac);
        return residue_is_unit(ctx, residues[comp], fac.factors[comp]);
    };
    auto indicator = [&](const std::vector<size_t>& comps) {
        std::vector<Residue> residues(ncomp);
        for (size_t j = 0; j < ncomp; ++j) {
            const size_t len =
                static_cast<size_t>(fac.factors[j].degree) * fac.factors[j].mult;
            residues[j].assign(len, ctx.zero(Level::base_q));
        }
        for (size_t j : comps) residues[j][0] = ctx.one(Level::base_q);
        return crt_join(ctx, residues, fac);
    };

    RMatrix B = m >= 1 && !rp_eq(d, rp_one(ctx))
                    ? mat_mul(ctx, dilation(ctx, 1, rp_inv(ctx, d)), A)
                    : A;

    std::vector<ElemFactor> applied;  // left-multiplied ops, application order
    auto apply = [&](unsigned j, unsigned k, const RPoly& c) {
        // row j += c * row k (1-based)
        if (rp_is_zero(ctx, c)) return;
        for (unsigned col = 0; col < m; ++col)
            B.e[j - 1][col] =
                rp_add(ctx, B.e[j - 1][col], rp_mul(ctx, c, B.e[k - 1][col]));
        applied.push_back({ElemFactor::Kind::transvection, j, k, c});
    };

    const RPoly one = rp_one(ctx);
    for (unsigned k = 0; k < m; ++k) {
        // Make the pivot a unit in every CRT component.  In a component
        // where it is not, some lower row has a unit entry in this column
        // (the trailing minor has unit determinant there); adding that row
        // turns the pivot into unit + maximal-ideal element, a unit.
        std::map<unsigned, std::vector<size_t>> rows_needed;
        for (size_t comp = 0; comp < ncomp; ++comp) {
            if (unit_in(B.e[k][k], comp)) continue;
            bool found = false;
            for (unsigned r = k + 1; r < m; ++r)
                if (unit_in(B.e[r][k], comp)) {
                    rows_needed[r].push_back(comp);
                    found = true;
                    break;
                }
            if (!found)
                throw DomainError("decompose_elementary: lost invertibility");
        }
        for (const auto& [r, comps] : rows_needed)
            apply(k + 1, r + 1, indicator(comps));

        const RPoly u = B.e[k][k];
        const RPoly uinv = rp_inv(ctx, u);
        // Clear the rest of the column.
        for (unsigned r = 0; r < m; ++r) {
            if (r == k || rp_is_zero(ctx, B.e[r][k])) continue;
            apply(r + 1, k + 1, rp_neg(ctx, rp_mul(ctx, B.e[r][k], uinv)));
        }
        // Normalize the pivot to 1 with three transvections against a lower
        // row.  At the last column the pivot is already 1 (det(B) = 1).
        if (!rp_eq(u, one)) {
            if (k + 1 >= m)
                throw DomainError("decompose_elementary: non-unimodular tail");
            const unsigned r = k + 1;
            apply(r + 1, k + 1, uinv);
            apply(k + 1, r + 1, rp_sub(ctx, one, u));
            apply(r + 1, k + 1, rp_neg(ctx, one));
        }
    }
    if (!(B == mat_identity(ctx)))
        throw DomainError("decompose_elementary: reduction failed");

    // L_t ... L_1 B_0 = I, so B_0 = L_1^{-1} ... L_t^{-1} and A = D_1(d) B_0.
    std::vector<ElemFactor> out;
    if (!rp_eq(d, rp_one(ctx)))
        out.push_back({ElemFactor::Kind::dilation, 1, 1, d});
    for (const auto& op : applied)
        out.push_back({op.kind, op.j, op.k, rp_neg(ctx, op.c)});
    return out;
}

}  // namespace linperm
