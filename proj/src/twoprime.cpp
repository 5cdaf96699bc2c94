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

#include "linperm/twoprime.hpp"

namespace linperm {

namespace {

void check_vec(const TowerCtx& ctx, const std::vector<FFElem>& v, unsigned p) {
    if (v.size() != p) throw DomainError("prescribed vector must have length p");
    for (const auto& c : v)
        if (c.level != Level::base_q)
            throw DomainError("prescribed coefficients must be at level base_q");
    (void)ctx;
}

}  // namespace

void check_prescribed(const TowerCtx& ctx, const PrescribedCoeffs& c) {
    if (c.p < 3 || !is_prime_u64(c.p))
        throw DomainError("p must be an odd prime");
    if (ctx.m() != 2 || ctx.s() != c.p)
        throw DomainError("context must have m = 2 and s = p");
    check_vec(ctx, c.f11, c.p);
    check_vec(ctx, c.f12, c.p);
    check_vec(ctx, c.f21, c.p);
    check_vec(ctx, c.f22, c.p);
}

LinPoly assemble_g(const TowerCtx& ctx, const PrescribedCoeffs& c,
                   const NormalPair& pair) {
    check_prescribed(ctx, c);
    RMatrix M = mat_zero(ctx);
    M.e[0][0] = rp_make(ctx, c.f11);
    M.e[0][1] = rp_make(ctx, c.f12);
    M.e[1][0] = rp_make(ctx, c.f21);
    M.e[1][1] = rp_make(ctx, c.f22);
    return psi(ctx, M, pair);
}

RPoly det_poly(const TowerCtx& ctx, const PrescribedCoeffs& c) {
    check_prescribed(ctx, c);
    const RPoly f11 = rp_make(ctx, c.f11);
    const RPoly f12 = rp_make(ctx, c.f12);
    const RPoly f21 = rp_make(ctx, c.f21);
    const RPoly f22 = rp_make(ctx, c.f22);
    return rp_sub(ctx, rp_mul(ctx, f11, f22), rp_mul(ctx, f12, f21));
}

bool is_pp_exact(const TowerCtx& ctx, const PrescribedCoeffs& c) {
    return is_unit(ctx, det_poly(ctx, c));
}

bool q_primitive_mod_p(const TowerCtx& ctx, unsigned p) {
    if (p < 2 || !is_prime_u64(p)) return false;
    const mpz_class qm = ctx.q() % p;
    const u64 q = mpz_get_ui(qm.get_mpz_t());
    if (q == 0) return false;
    u64 pw = 1;
    for (unsigned k = 1; k < p; ++k) {
        pw = pw * q % p;
        if (pw == 1) return k == p - 1;
    }
    return false;
}

SufficientVerdict is_pp_sufficient(const TowerCtx& ctx,
                                   const PrescribedCoeffs& c) {
    check_prescribed(ctx, c);
    if (c.p == ctx.p())
        throw DomainError("is_pp_sufficient: p equals the characteristic");
    if (!q_primitive_mod_p(ctx, c.p))
        throw DomainError("is_pp_sufficient: q is not primitive mod p");
    const RPoly D = det_poly(ctx, c);
    const FFElem d1 = rp_eval_one(ctx, D);
    const FFElem p_in_fq = ctx.from_int(Level::base_q, c.p);
    const FFElem excluded = ctx.mul(p_in_fq, D[0]);
    if (ctx.is_zero(d1) || d1 == excluded) return SufficientVerdict::Inconclusive;
    return SufficientVerdict::PP;
}

bool corgusta_check(const TowerCtx& ctx, const std::vector<FFElem>& f,
                    unsigned p) {
    if (p < 3 || !is_prime_u64(p))
        throw DomainError("corgusta_check: p must be an odd prime");
    if (p == ctx.p())
        throw DomainError("corgusta_check: p equals the characteristic");
    if (!q_primitive_mod_p(ctx, p))
        throw DomainError("corgusta_check: q is not primitive mod p");
    check_vec(ctx, f, p);
    FFElem total = ctx.zero(Level::base_q);
    FFElem tail = ctx.zero(Level::base_q);
    for (unsigned j = 0; j < p; ++j) {
        total = ctx.add(total, f[j]);
        if (j >= 1) tail = ctx.add(tail, f[j]);
    }
    if (ctx.is_zero(total)) return false;
    const FFElem pinv = ctx.inv(ctx.from_int(Level::base_q, p));
    const FFElem one = ctx.one(Level::base_q);
    // -(1/p) * tail + (1 - 1/p) * f_0
    const FFElem cond2 = ctx.sub(ctx.mul(ctx.sub(one, pinv), f[0]),
                                 ctx.mul(pinv, tail));
    return !ctx.is_zero(cond2);
}

}  // namespace linperm
