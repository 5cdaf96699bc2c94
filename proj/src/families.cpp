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

#include "linperm/families.hpp"

namespace linperm {

namespace {

// Assembles the psi-image of an upper-triangular (or diagonal) coefficient
// matrix entrywise, along with the matrix certificate.
FamilyGenResult assemble(const TowerCtx& ctx, const NormalPair& pair,
                         const std::vector<std::vector<RPoly>>& c,
                         bool diagonal_only) {
    const unsigned m = ctx.m();
    FamilyGenResult out{lp_zero(ctx), mat_zero(ctx)};
    for (unsigned j = 1; j <= m; ++j)
        for (unsigned k = j; k <= m; ++k) {
            if (diagonal_only && j != k) continue;
            const RPoly& cjk = c[j - 1][k - 1];
            if (rp_is_zero(ctx, cjk)) continue;
            out.f = lp_add(ctx, out.f, psi_unit(ctx, j, k, cjk, pair));
            out.cert.e[j - 1][k - 1] = cjk;
        }
    return out;
}

// Diagonal entries per family: all units, optionally with product 1
// (m - 1 free units, the last one forced to the inverse of their product).
std::vector<RPoly> draw_diagonal(const TowerCtx& ctx, bool det_one, Rng& rng) {
    const unsigned m = ctx.m();
    std::vector<RPoly> d(m);
    RPoly prod = rp_one(ctx);
    for (unsigned i = 0; i + 1 < m; ++i) {
        d[i] = rp_random_unit(ctx, rng);
        prod = rp_mul(ctx, prod, d[i]);
    }
    d[m - 1] = det_one ? rp_inv(ctx, prod) : rp_random_unit(ctx, rng);
    return d;
}

FamilyGenResult gen_triangular(const TowerCtx& ctx, const NormalPair& pair,
                               bool det_one, bool diagonal_only, Rng& rng) {
    const unsigned m = ctx.m();
    std::vector<std::vector<RPoly>> c(m, std::vector<RPoly>(m, rp_zero(ctx)));
    const std::vector<RPoly> diag = draw_diagonal(ctx, det_one, rng);
    for (unsigned i = 0; i < m; ++i) c[i][i] = diag[i];
    if (!diagonal_only)
        for (unsigned j = 0; j < m; ++j)
            for (unsigned k = j + 1; k < m; ++k) c[j][k] = rp_random(ctx, rng);
    return assemble(ctx, pair, c, diagonal_only);
}

}  // namespace

const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::PP: return "PP";
        case FamilyTag::SPP: return "SPP";
        case FamilyTag::BPP: return "BPP";
        case FamilyTag::SBPP: return "SBPP";
        case FamilyTag::DPP: return "DPP";
        case FamilyTag::SDPP: return "SDPP";
    }
    return "?";
}

std::optional<FamilyTag> family_from_name(const std::string& s) {
    for (FamilyTag t : {FamilyTag::PP, FamilyTag::SPP, FamilyTag::BPP,
                        FamilyTag::SBPP, FamilyTag::DPP, FamilyTag::SDPP})
        if (s == family_name(t)) return t;
    return std::nullopt;
}

LinPoly gen_spp(const TowerCtx& ctx, const NormalPair& pair, unsigned t,
                Rng& rng) {
    if (t < 1) throw DomainError("gen_spp: t must be at least 1");
    if (ctx.m() < 2)
        throw DomainError("gen_spp: transvections need m >= 2");
    LinPoly f = lp_x(ctx);
    std::uniform_int_distribution<unsigned> pick(1, ctx.m());
    for (unsigned d = 0; d < t; ++d) {
        unsigned j = pick(rng), k = pick(rng);
        while (k == j) k = pick(rng);
        const RPoly c = rp_random(ctx, rng);
        f = lp_compose(ctx, f, psi_transvection(ctx, j, k, c, pair));
    }
    return f;
}

LinPoly gen_pp(const TowerCtx& ctx, const NormalPair& pair, const LinPoly& h,
               const RPoly& t) {
    const RPoly t1 = rp_add(ctx, t, rp_one(ctx));
    if (!is_unit(ctx, t1)) throw DomainError("gen_pp: t + 1 must be a unit");
    return lp_compose(ctx, psi_dilation(ctx, 1, t1, pair), h);
}

FamilyGenResult gen_bpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng) {
    return gen_triangular(ctx, pair, false, false, rng);
}

FamilyGenResult gen_sbpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng) {
    return gen_triangular(ctx, pair, true, false, rng);
}

FamilyGenResult gen_dpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng) {
    return gen_triangular(ctx, pair, false, true, rng);
}

FamilyGenResult gen_sdpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng) {
    return gen_triangular(ctx, pair, true, true, rng);
}

std::set<FamilyTag> classify_family(const TowerCtx& ctx, const LinPoly& f,
                                    const NormalPair& pair) {
    const std::set<MatClass> mc = classify(ctx, phi(ctx, f, pair));
    std::set<FamilyTag> tags;
    if (!mc.count(MatClass::GL)) return tags;
    tags.insert(FamilyTag::PP);
    if (mc.count(MatClass::SL)) tags.insert(FamilyTag::SPP);
    if (mc.count(MatClass::Borel)) tags.insert(FamilyTag::BPP);
    if (mc.count(MatClass::SL) && mc.count(MatClass::Borel))
        tags.insert(FamilyTag::SBPP);
    if (mc.count(MatClass::Diagonal)) tags.insert(FamilyTag::DPP);
    if (mc.count(MatClass::SL) && mc.count(MatClass::Diagonal))
        tags.insert(FamilyTag::SDPP);
    return tags;
}

mpz_class size_units(const TowerCtx& ctx) {
    return unit_group_size(ctx, factor_cyclotomic(ctx));
}

mpz_class size_gl(const TowerCtx& ctx) {
    // Product over local rings: q^{m^2 d_j (s_j - 1)} prod_{i=1..m}
    // (q^{m d_j} - q^{(m-i) d_j}); equal to the rational form
    // q^{m^2 s} prod prod (1 - q^{-i d_j}) with denominators cleared.
    const CycloFactorization fac = factor_cyclotomic(ctx);
    const mpz_class q = ctx.q();
    const unsigned long m = ctx.m();
    mpz_class total = 1;
    for (const auto& f : fac.factors) {
        mpz_class ideal;
        mpz_pow_ui(ideal.get_mpz_t(), q.get_mpz_t(),
                   m * m * f.degree * (f.mult - 1));
        total *= ideal;
        mpz_class qmd;
        mpz_pow_ui(qmd.get_mpz_t(), q.get_mpz_t(), m * f.degree);
        for (unsigned long i = 1; i <= m; ++i) {
            mpz_class low;
            mpz_pow_ui(low.get_mpz_t(), q.get_mpz_t(), (m - i) * f.degree);
            total *= qmd - low;
        }
    }
    return total;
}

mpz_class size_sl(const TowerCtx& ctx) {
    const mpz_class gl = size_gl(ctx);
    const mpz_class u = size_units(ctx);
    return gl / u;
}

mpz_class size_borel(const TowerCtx& ctx) {
    const unsigned long m = ctx.m();
    mpz_class qs;
    mpz_pow_ui(qs.get_mpz_t(), ctx.q().get_mpz_t(), ctx.s());
    mpz_class free_part;
    mpz_pow_ui(free_part.get_mpz_t(), qs.get_mpz_t(), m * (m - 1) / 2);
    mpz_class diag;
    mpz_pow_ui(diag.get_mpz_t(), size_units(ctx).get_mpz_t(), m);
    return free_part * diag;
}

mpz_class size_diag(const TowerCtx& ctx) {
    mpz_class diag;
    mpz_pow_ui(diag.get_mpz_t(), size_units(ctx).get_mpz_t(), ctx.m());
    return diag;
}

}  // namespace linperm
