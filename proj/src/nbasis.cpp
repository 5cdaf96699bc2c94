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

#include "linperm/nbasis.hpp"

namespace linperm {

namespace {

constexpr unsigned kSearchAttempts = 200000;

void check_mid(const TowerCtx& ctx, const FFElem& a) {
    (void)ctx;
    if (a.level != Level::mid_qm)
        throw DomainError("normal-basis input must be at level mid_qm");
}

// Gram matrix G_ij = Tr_{F_{q^m}/F_q}(alpha^{q^i} alpha^{q^j}), entries in F_q.
// The trace form is nondegenerate, so G is nonsingular iff the conjugates
// are F_q-independent.
FMatrix gram(const TowerCtx& ctx, const FFElem& alpha) {
    const unsigned m = ctx.m();
    std::vector<FFElem> conj(m);
    conj[0] = alpha;
    for (unsigned i = 1; i < m; ++i) conj[i] = ctx.frobenius_q(conj[i - 1], 1);
    FMatrix G(m, std::vector<Field::Elem>(m));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i; j < m; ++j) {
            const FFElem t = ctx.trace(ctx.mul(conj[i], conj[j]), Level::base_q);
            G[i][j] = t.coeffs;
            G[j][i] = t.coeffs;
        }
    return G;
}

// Gram matrix of the s conjugates of beta over F_{q^m}:
// G_ij = Tr_{n/m}(beta^{q^{m i}} beta^{q^{m j}}), entries in F_{q^m}.
std::vector<std::vector<Field::Elem>> gram_over_mid(const TowerCtx& ctx,
                                                    const FFElem& beta) {
    const unsigned m = ctx.m(), s = ctx.s();
    std::vector<FFElem> conj(s);
    conj[0] = beta;
    for (unsigned i = 1; i < s; ++i) conj[i] = ctx.frobenius_q(conj[i - 1], m);
    std::vector<std::vector<Field::Elem>> G(s,
                                            std::vector<Field::Elem>(s));
    for (unsigned i = 0; i < s; ++i)
        for (unsigned j = i; j < s; ++j) {
            const FFElem t =
                ctx.trace(ctx.mul(conj[i], conj[j]), Level::mid_qm);
            G[i][j] = t.coeffs;
            G[j][i] = t.coeffs;
        }
    return G;
}

}  // namespace

bool is_normal(const TowerCtx& ctx, const FFElem& alpha) {
    check_mid(ctx, alpha);
    if (ctx.is_zero(alpha)) return false;
    const Field& Fq = ctx.field(Level::base_q);
    return mat_rank(Fq, gram(ctx, alpha)) == ctx.m();
}

NormalPair dual_basis(const TowerCtx& ctx, const FFElem& alpha) {
    check_mid(ctx, alpha);
    const unsigned m = ctx.m();
    const Field& Fq = ctx.field(Level::base_q);
    FMatrix G = gram(ctx, alpha);
    // u = sum_j c_j alpha^{q^j}; Tr(alpha^{q^i} u) = delta_{i0} gives G c = e_0.
    std::vector<Field::Elem> rhs(m, Fq.zero());
    rhs[0] = Fq.one();
    auto c = mat_solve(Fq, std::move(G), std::move(rhs));
    if (!c) throw DomainError("dual_basis: alpha is not normal");
    FFElem u = ctx.zero(Level::mid_qm);
    FFElem conj = alpha;
    for (unsigned j = 0; j < m; ++j) {
        const FFElem cj = ctx.embed({Level::base_q, (*c)[j]}, Level::mid_qm);
        u = ctx.add(u, ctx.mul(cj, conj));
        conj = ctx.frobenius_q(conj, 1);
    }
    NormalPair pair{alpha, u, u == alpha, ctx.zero(Level::top_qn),
                    ctx.zero(Level::top_qn)};
    attach_top_frame(ctx, pair);
    return pair;
}

bool is_normal_over_mid(const TowerCtx& ctx, const FFElem& beta) {
    if (beta.level != Level::top_qn)
        throw DomainError("is_normal_over_mid: input must be at level top_qn");
    if (ctx.is_zero(beta)) return false;
    const Field& Fm = ctx.field(Level::mid_qm);
    return mat_rank(Fm, gram_over_mid(ctx, beta)) == ctx.s();
}

void attach_top_frame(const TowerCtx& ctx, NormalPair& pair) {
    const unsigned s = ctx.s();
    const Field& Fm = ctx.field(Level::mid_qm);
    Rng rng(ctx.seed() ^ 0x746f706672616d65ull);
    for (unsigned att = 0; att < kSearchAttempts; ++att) {
        const FFElem beta = ctx.random(Level::top_qn, rng);
        auto G = gram_over_mid(ctx, beta);
        // v = sum_i c_i beta^{q^{m i}}; Tr_{n/m}(beta^{q^{m i}} v) = delta_{i0}.
        std::vector<Field::Elem> rhs(s, Fm.zero());
        rhs[0] = Fm.one();
        auto c = mat_solve(Fm, std::move(G), std::move(rhs));
        if (!c) continue;  // beta is not normal over F_{q^m}
        FFElem v = ctx.zero(Level::top_qn);
        FFElem conj = beta;
        for (unsigned i = 0; i < s; ++i) {
            const FFElem ci =
                ctx.embed(FFElem{Level::mid_qm, (*c)[i]}, Level::top_qn);
            v = ctx.add(v, ctx.mul(ci, conj));
            conj = ctx.frobenius_q(conj, ctx.m());
        }
        pair.beta = beta;
        pair.v = v;
        return;
    }
    throw SearchExhausted("attach_top_frame: attempt bound reached");
}

bool is_dual_pair(const TowerCtx& ctx, const NormalPair& pair) {
    check_mid(ctx, pair.alpha);
    check_mid(ctx, pair.u);
    const unsigned m = ctx.m();
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            const FFElem t = ctx.trace(
                ctx.mul(ctx.frobenius_q(pair.alpha, i), ctx.frobenius_q(pair.u, j)),
                Level::base_q);
            const FFElem want =
                i == j ? ctx.one(Level::base_q) : ctx.zero(Level::base_q);
            if (t != want) return false;
        }
    if (pair.self_dual && pair.u != pair.alpha) return false;
    if (pair.beta.level == Level::top_qn && !ctx.is_zero(pair.beta)) {
        if (pair.v.level != Level::top_qn) return false;
        FFElem conj = pair.beta;
        for (unsigned i = 0; i < ctx.s(); ++i) {
            const FFElem t = ctx.trace(ctx.mul(conj, pair.v), Level::mid_qm);
            const FFElem want =
                i == 0 ? ctx.one(Level::mid_qm) : ctx.zero(Level::mid_qm);
            if (t != want) return false;
            conj = ctx.frobenius_q(conj, m);
        }
    }
    return true;
}

FFElem find_normal(const TowerCtx& ctx, Rng& rng) {
    for (unsigned att = 0; att < kSearchAttempts; ++att) {
        FFElem a = ctx.random(Level::mid_qm, rng);
        if (is_normal(ctx, a)) return a;
    }
    throw SearchExhausted("find_normal: attempt bound reached");
}

bool self_dual_exists(u64 p, unsigned m) {
    if (p % 2 == 1) return m % 2 == 1;
    return m % 4 != 0;
}

std::optional<NormalPair> find_self_dual_normal(const TowerCtx& ctx, Rng& rng) {
    if (!self_dual_exists(ctx.p(), ctx.m())) return std::nullopt;
    for (unsigned att = 0; att < kSearchAttempts; ++att) {
        FFElem a = ctx.random(Level::mid_qm, rng);
        if (!is_normal(ctx, a)) continue;
        NormalPair pair = dual_basis(ctx, a);
        if (pair.self_dual) return pair;
    }
    throw SearchExhausted("find_self_dual_normal: attempt bound reached");
}

}  // namespace linperm
