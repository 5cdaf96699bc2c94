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

#include "linperm/linpoly.hpp"

#include <algorithm>

namespace linperm {

namespace {

void check_poly(const TowerCtx& ctx, const LinPoly& f) {
    if (f.a.size() != ctx.n()) throw DomainError("LinPoly has wrong length");
    for (const auto& c : f.a)
        if (c.level != Level::mid_qm)
            throw DomainError("LinPoly coefficient not at level mid_qm");
}

}  // namespace

LinPoly lp_zero(const TowerCtx& ctx) {
    return {std::vector<FFElem>(ctx.n(), ctx.zero(Level::mid_qm))};
}

LinPoly lp_x(const TowerCtx& ctx) {
    LinPoly f = lp_zero(ctx);
    f.a[0] = ctx.one(Level::mid_qm);
    return f;
}

LinPoly lp_make(const TowerCtx& ctx, std::vector<FFElem> coeffs) {
    if (coeffs.size() > ctx.n()) throw DomainError("lp_make: too many coefficients");
    LinPoly f = lp_zero(ctx);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].level != Level::mid_qm)
            throw DomainError("lp_make: coefficient not at level mid_qm");
        f.a[i] = std::move(coeffs[i]);
    }
    return f;
}

LinPoly lp_random(const TowerCtx& ctx, Rng& rng) {
    LinPoly f = lp_zero(ctx);
    for (auto& c : f.a) c = ctx.random(Level::mid_qm, rng);
    return f;
}

bool lp_is_zero(const TowerCtx& ctx, const LinPoly& f) {
    return std::all_of(f.a.begin(), f.a.end(),
                       [&](const FFElem& c) { return ctx.is_zero(c); });
}

FFElem lp_eval(const TowerCtx& ctx, const LinPoly& f, const FFElem& x) {
    check_poly(ctx, f);
    if (x.level != Level::top_qn)
        throw DomainError("lp_eval: argument must be at level top_qn");
    FFElem acc = ctx.zero(Level::top_qn);
    FFElem conj = x;
    for (unsigned i = 0; i < ctx.n(); ++i) {
        if (!ctx.is_zero(f.a[i]))
            acc = ctx.add(acc, ctx.mul(ctx.embed(f.a[i], Level::top_qn), conj));
        if (i + 1 < ctx.n()) conj = ctx.frobenius_q(conj, 1);
    }
    return acc;
}

LinPoly lp_add(const TowerCtx& ctx, const LinPoly& f, const LinPoly& g) {
    check_poly(ctx, f);
    check_poly(ctx, g);
    LinPoly r = lp_zero(ctx);
    for (unsigned i = 0; i < ctx.n(); ++i) r.a[i] = ctx.add(f.a[i], g.a[i]);
    return r;
}

LinPoly lp_sub(const TowerCtx& ctx, const LinPoly& f, const LinPoly& g) {
    check_poly(ctx, f);
    check_poly(ctx, g);
    LinPoly r = lp_zero(ctx);
    for (unsigned i = 0; i < ctx.n(); ++i) r.a[i] = ctx.sub(f.a[i], g.a[i]);
    return r;
}

LinPoly lp_scale(const TowerCtx& ctx, const FFElem& lambda, const LinPoly& f) {
    check_poly(ctx, f);
    if (lambda.level != Level::base_q)
        throw DomainError("lp_scale: scalar must be at level base_q");
    const FFElem l = ctx.embed(lambda, Level::mid_qm);
    LinPoly r = lp_zero(ctx);
    for (unsigned i = 0; i < ctx.n(); ++i) r.a[i] = ctx.mul(l, f.a[i]);
    return r;
}

LinPoly lp_compose(const TowerCtx& ctx, const LinPoly& f, const LinPoly& g) {
    check_poly(ctx, f);
    check_poly(ctx, g);
    const unsigned n = ctx.n();
    LinPoly r = lp_zero(ctx);
    for (unsigned i = 0; i < n; ++i) {
        if (ctx.is_zero(f.a[i])) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (ctx.is_zero(g.a[j])) continue;
            const unsigned k = (i + j) % n;
            r.a[k] = ctx.add(r.a[k], ctx.mul(f.a[i], ctx.frobenius_q(g.a[j], i)));
        }
    }
    return r;
}

std::vector<std::vector<FFElem>> split_blocks(const TowerCtx& ctx,
                                              const LinPoly& f) {
    check_poly(ctx, f);
    std::vector<std::vector<FFElem>> blocks(ctx.s());
    for (unsigned i = 0; i < ctx.s(); ++i) {
        blocks[i].resize(ctx.m());
        for (unsigned r = 0; r < ctx.m(); ++r) blocks[i][r] = f.a[i * ctx.m() + r];
    }
    return blocks;
}

LinPoly join_blocks(const TowerCtx& ctx,
                    const std::vector<std::vector<FFElem>>& blocks) {
    if (blocks.size() != ctx.s()) throw DomainError("join_blocks: need s blocks");
    LinPoly f = lp_zero(ctx);
    for (unsigned i = 0; i < ctx.s(); ++i) {
        if (blocks[i].size() != ctx.m())
            throw DomainError("join_blocks: block has wrong length");
        for (unsigned r = 0; r < ctx.m(); ++r) f.a[i * ctx.m() + r] = blocks[i][r];
    }
    return f;
}

PMatrix lp_matrix(const TowerCtx& ctx, const LinPoly& f) {
    check_poly(ctx, f);
    const u64 p = ctx.p();
    const unsigned N = ctx.degree(Level::top_qn);
    const Field& T = ctx.field(Level::top_qn);
    const PMatrix& F = ctx.frob_q_matrix(Level::top_qn);
    PMatrix M(N, std::vector<u64>(N, 0));
    PMatrix C = pmat_identity(N);  // Frob^i
    for (unsigned i = 0; i < ctx.n(); ++i) {
        if (!ctx.is_zero(f.a[i])) {
            const FFElem ai = ctx.embed(f.a[i], Level::top_qn);
            M = pmat_add(M, pmat_mul(mult_matrix(T, ai.coeffs), C, p), p);
        }
        if (i + 1 < ctx.n()) C = pmat_mul(F, C, p);
    }
    return M;
}

bool is_permutation(const TowerCtx& ctx, const LinPoly& f) {
    const unsigned N = ctx.degree(Level::top_qn);
    return pmat_rank(lp_matrix(ctx, f), ctx.p()) == N;
}

bool is_permutation_bruteforce(const TowerCtx& ctx, const LinPoly& f,
                               u64 bound) {
    check_poly(ctx, f);
    const mpz_class size = ctx.level_size(Level::top_qn);
    if (size > bound)
        throw DomainError("is_permutation_bruteforce: field exceeds the bound");
    const u64 total = mpz_get_ui(size.get_mpz_t());
    const u64 p = ctx.p();
    const unsigned N = ctx.degree(Level::top_qn);
    const PMatrix& F = ctx.frob_q_matrix(Level::top_qn);
    const Field& T = ctx.field(Level::top_qn);

    // Per-coefficient multiplication matrices, so each point costs 2n matvecs.
    std::vector<PMatrix> mult(ctx.n());
    std::vector<bool> used(ctx.n(), false);
    for (unsigned i = 0; i < ctx.n(); ++i) {
        if (ctx.is_zero(f.a[i])) continue;
        used[i] = true;
        mult[i] = mult_matrix(T, ctx.embed(f.a[i], Level::top_qn).coeffs);
    }

    std::vector<bool> seen(total, false);
    std::vector<u64> x(N, 0);
    for (u64 idx = 0; idx < total; ++idx) {
        std::vector<u64> conj = x;
        std::vector<u64> img(N, 0);
        for (unsigned i = 0; i < ctx.n(); ++i) {
            if (used[i]) {
                const std::vector<u64> term = pmat_apply(mult[i], conj, p);
                for (unsigned r = 0; r < N; ++r) img[r] = (img[r] + term[r]) % p;
            }
            if (i + 1 < ctx.n()) conj = pmat_apply(F, conj, p);
        }
        u64 code = 0;
        for (unsigned r = N; r-- > 0;) code = code * p + img[r];
        if (seen[code]) return false;
        seen[code] = true;
        // odometer step to the next field element
        for (unsigned r = 0; r < N; ++r) {
            if (++x[r] < p) break;
            x[r] = 0;
        }
    }
    return true;
}

}  // namespace linperm
