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

#include "linperm/cyclring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace linperm {

namespace {

const Field& baseF(const TowerCtx& ctx) { return ctx.field(Level::base_q); }

// Strip level tags: RPoly / coefficient vectors -> FPoly over the base field.
FPoly to_fpoly(const TowerCtx& ctx, const std::vector<FFElem>& a) {
    FPoly f;
    f.reserve(a.size());
    for (const auto& c : a) {
        if (c.level != Level::base_q)
            throw DomainError("RPoly coefficient not at level base_q");
        f.push_back(c.coeffs);
    }
    fp_trim(baseF(ctx), f);
    return f;
}

std::vector<FFElem> tag(const FPoly& f, size_t len) {
    std::vector<FFElem> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = {Level::base_q, f[i]};
    while (r.size() < len) r.push_back({Level::base_q, {}});
    return r;
}

RPoly from_fpoly(const TowerCtx& ctx, const FPoly& f) {
    RPoly r = tag(f, ctx.s());
    for (auto& c : r)
        if (c.coeffs.empty()) c.coeffs = baseF(ctx).zero();
    return r;
}

// x^s - 1 as an FPoly over the base field.
FPoly xs_minus_one(const TowerCtx& ctx) {
    const Field& F = baseF(ctx);
    FPoly f(ctx.s() + 1, F.zero());
    f[0] = F.neg(F.one());
    f[ctx.s()] = F.one();
    return f;
}

void check_len(const TowerCtx& ctx, const RPoly& a) {
    if (a.size() != ctx.s()) throw DomainError("RPoly has wrong length");
}

FPoly factor_power(const TowerCtx& ctx, const CycloFactor& f) {
    const Field& F = baseF(ctx);
    FPoly base = to_fpoly(ctx, f.coeffs);
    FPoly r{F.one()};
    for (unsigned i = 0; i < f.mult; ++i) r = fp_mul(F, r, base);
    return r;
}

}  // namespace

RPoly rp_zero(const TowerCtx& ctx) {
    return RPoly(ctx.s(), ctx.zero(Level::base_q));
}

RPoly rp_one(const TowerCtx& ctx) {
    RPoly r = rp_zero(ctx);
    r[0] = ctx.one(Level::base_q);
    return r;
}

RPoly rp_x(const TowerCtx& ctx) {
    RPoly r = rp_zero(ctx);
    r[1 % ctx.s()] = ctx.one(Level::base_q);
    return r;
}

RPoly rp_from_int(const TowerCtx& ctx, u64 c) {
    RPoly r = rp_zero(ctx);
    r[0] = ctx.from_int(Level::base_q, c);
    return r;
}

RPoly rp_make(const TowerCtx& ctx, std::vector<FFElem> coeffs) {
    if (coeffs.size() > ctx.s()) throw DomainError("rp_make: too many coefficients");
    RPoly r = rp_zero(ctx);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].level != Level::base_q)
            throw DomainError("rp_make: coefficient not at level base_q");
        r[i] = std::move(coeffs[i]);
    }
    return r;
}

bool rp_is_zero(const TowerCtx& ctx, const RPoly& a) {
    return std::all_of(a.begin(), a.end(),
                       [&](const FFElem& c) { return ctx.is_zero(c); });
}

bool rp_eq(const RPoly& a, const RPoly& b) { return a == b; }

RPoly rp_add(const TowerCtx& ctx, const RPoly& a, const RPoly& b) {
    check_len(ctx, a);
    check_len(ctx, b);
    RPoly r(ctx.s());
    for (unsigned i = 0; i < ctx.s(); ++i) r[i] = ctx.add(a[i], b[i]);
    return r;
}

RPoly rp_sub(const TowerCtx& ctx, const RPoly& a, const RPoly& b) {
    check_len(ctx, a);
    check_len(ctx, b);
    RPoly r(ctx.s());
    for (unsigned i = 0; i < ctx.s(); ++i) r[i] = ctx.sub(a[i], b[i]);
    return r;
}

RPoly rp_neg(const TowerCtx& ctx, const RPoly& a) {
    check_len(ctx, a);
    RPoly r(ctx.s());
    for (unsigned i = 0; i < ctx.s(); ++i) r[i] = ctx.neg(a[i]);
    return r;
}

RPoly rp_mul(const TowerCtx& ctx, const RPoly& a, const RPoly& b) {
    check_len(ctx, a);
    check_len(ctx, b);
    const unsigned s = ctx.s();
    RPoly r = rp_zero(ctx);
    for (unsigned i = 0; i < s; ++i) {
        if (ctx.is_zero(a[i])) continue;
        for (unsigned j = 0; j < s; ++j)
            r[(i + j) % s] = ctx.add(r[(i + j) % s], ctx.mul(a[i], b[j]));
    }
    return r;
}

RPoly rp_scal(const TowerCtx& ctx, const FFElem& c, const RPoly& a) {
    check_len(ctx, a);
    RPoly r(ctx.s());
    for (unsigned i = 0; i < ctx.s(); ++i) r[i] = ctx.mul(c, a[i]);
    return r;
}

RPoly rp_random(const TowerCtx& ctx, Rng& rng) {
    RPoly r(ctx.s());
    for (auto& c : r) c = ctx.random(Level::base_q, rng);
    return r;
}

FFElem rp_eval_one(const TowerCtx& ctx, const RPoly& a) {
    check_len(ctx, a);
    FFElem acc = ctx.zero(Level::base_q);
    for (const auto& c : a) acc = ctx.add(acc, c);
    return acc;
}

bool is_unit(const TowerCtx& ctx, const RPoly& a) {
    check_len(ctx, a);
    const Field& F = baseF(ctx);
    const FPoly g = fp_gcd(F, to_fpoly(ctx, a), xs_minus_one(ctx));
    return fp_deg(g) == 0;
}

RPoly rp_inv(const TowerCtx& ctx, const RPoly& a) {
    check_len(ctx, a);
    const Field& F = baseF(ctx);
    const FpExtGcd eg = fp_ext_gcd(F, to_fpoly(ctx, a), xs_minus_one(ctx));
    if (fp_deg(eg.g) != 0) throw DomainError("rp_inv: not a unit of R_{q,s}");
    return from_fpoly(ctx, fp_mod(F, eg.s, xs_minus_one(ctx)));
}

RPoly rp_random_unit(const TowerCtx& ctx, Rng& rng) {
    for (unsigned att = 0; att < 100000; ++att) {
        RPoly c = rp_random(ctx, rng);
        if (is_unit(ctx, c)) return c;
    }
    throw SearchExhausted("rp_random_unit: no unit found");
}

// ---------------------------------------------------------------------------

CycloFactorization factor_cyclotomic(const TowerCtx& ctx) {
    const Field& F = baseF(ctx);
    const u64 p = ctx.p();
    unsigned s = ctx.s();
    unsigned pk = 1;
    while (s % p == 0) {
        s /= p;
        pk *= static_cast<unsigned>(p);
    }
    const unsigned sp = s;  // s' with gcd(s', p) = 1

    // q-cyclotomic cosets mod s', keyed by smallest element.
    const mpz_class qz = ctx.q() % sp;
    const unsigned qm = static_cast<unsigned>(mpz_get_ui(qz.get_mpz_t()));
    std::map<unsigned, std::vector<unsigned>> cosets;
    std::vector<bool> seen(sp, false);
    for (unsigned a = 0; a < sp; ++a) {
        if (seen[a]) continue;
        std::vector<unsigned> coset;
        unsigned c = a;
        do {
            seen[c] = true;
            coset.push_back(c);
            c = static_cast<unsigned>((static_cast<u64>(c) * qm) % sp);
        } while (c != a);
        cosets.emplace(a, std::move(coset));
    }

    unsigned D = 1;
    for (const auto& [a, coset] : cosets)
        D = static_cast<unsigned>(std::lcm<u64>(D, coset.size()));

    // Scratch extension F_{q^D} containing a primitive s'-th root of unity.
    Rng rng(ctx.seed() ^ 0x9e3779b97f4a7c15ull);
    const unsigned scratch_deg = ctx.e() * D;
    Field K;
    PMatrix emb;  // embedding of F_q into K
    if (scratch_deg == F.degree()) {
        K = F;
        emb.assign(K.degree(), std::vector<u64>(F.degree(), 0));
        for (unsigned i = 0; i < F.degree(); ++i) emb[i][i] = 1;
    } else {
        PPoly mod = scratch_deg == 1 ? PPoly{0, 1} : find_irreducible(p, scratch_deg, rng);
        K = Field(p, mod);
        const Field::Elem root =
            F.degree() == 1 ? K.one() : root_of_irreducible(F.modulus(), K, rng);
        emb.assign(K.degree(), std::vector<u64>(F.degree(), 0));
        Field::Elem pw = K.one();
        for (unsigned j = 0; j < F.degree(); ++j) {
            for (unsigned i = 0; i < K.degree(); ++i) emb[i][j] = pw[i];
            if (j + 1 < F.degree()) pw = K.mul(pw, root);
        }
    }

    // beta: element of multiplicative order exactly s'.
    Field::Elem beta = K.one();
    if (sp > 1) {
        const mpz_class cof = (K.size() - 1) / sp;
        const auto sp_factors = factor_u64(sp);
        bool found = false;
        for (unsigned att = 0; att < 100000 && !found; ++att) {
            Field::Elem z = K.random(rng);
            if (K.is_zero(z)) continue;
            Field::Elem cand = K.pow(z, cof);
            if (K.is_zero(cand) || cand == K.one()) continue;
            found = true;
            for (const auto& [l, _] : sp_factors)
                if (K.pow(cand, static_cast<u64>(sp / l)) == K.one()) {
                    found = false;
                    break;
                }
            if (found) beta = std::move(cand);
        }
        if (!found) throw SearchExhausted("factor_cyclotomic: no s'-th root of unity");
    }

    CycloFactorization fac;
    for (const auto& [a, coset] : cosets) {
        // minimal polynomial of beta^a over F_q: prod over the coset
        FPoly f{K.one()};
        for (unsigned c : coset) {
            const Field::Elem r = K.pow(beta, static_cast<u64>(c));
            f = fp_mul(K, f, FPoly{K.neg(r), K.one()});
        }
        CycloFactor cf;
        cf.degree = static_cast<unsigned>(coset.size());
        cf.mult = pk;
        cf.coeffs.resize(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            auto x = pmat_solve(emb, f[i], p);
            if (!x)
                throw DomainError("factor_cyclotomic: coefficient outside F_q");
            cf.coeffs[i] = {Level::base_q, std::move(*x)};
        }
        fac.factors.push_back(std::move(cf));
    }
    return fac;
}

mpz_class unit_group_size(const TowerCtx& ctx, const CycloFactorization& fac) {
    const mpz_class q = ctx.q();
    mpz_class total = 1;
    for (const auto& f : fac.factors) {
        mpz_class qd;
        mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), f.degree);
        mpz_class tail;
        mpz_pow_ui(tail.get_mpz_t(), q.get_mpz_t(),
                   static_cast<unsigned long>(f.degree) * (f.mult - 1));
        total *= (qd - 1) * tail;
    }
    return total;
}

std::vector<Residue> crt_split(const TowerCtx& ctx, const RPoly& a,
                               const CycloFactorization& fac) {
    check_len(ctx, a);
    const Field& F = baseF(ctx);
    const FPoly lifted = to_fpoly(ctx, a);
    std::vector<Residue> out;
    out.reserve(fac.factors.size());
    for (const auto& f : fac.factors) {
        const FPoly mod = factor_power(ctx, f);
        FPoly r = fp_mod(F, lifted, mod);
        out.push_back(tag(r, static_cast<size_t>(f.degree) * f.mult));
        for (auto& c : out.back())
            if (c.coeffs.empty()) c.coeffs = F.zero();
    }
    return out;
}

RPoly crt_join(const TowerCtx& ctx, const std::vector<Residue>& residues,
               const CycloFactorization& fac) {
    if (residues.size() != fac.factors.size())
        throw DomainError("crt_join: residue count mismatch");
    const Field& F = baseF(ctx);
    const FPoly M = xs_minus_one(ctx);
    FPoly acc{};
    for (size_t j = 0; j < fac.factors.size(); ++j) {
        const FPoly mj = factor_power(ctx, fac.factors[j]);
        if (residues[j].size() != static_cast<size_t>(fac.factors[j].degree) *
                                      fac.factors[j].mult)
            throw DomainError("crt_join: malformed residue length");
        const FPoly Mj = fp_divmod(F, M, mj).first;
        const FpExtGcd eg = fp_ext_gcd(F, Mj, mj);
        if (fp_deg(eg.g) != 0)
            throw DomainError("crt_join: factors not coprime");
        // eg.s * Mj = 1 mod mj; term = residue * s * Mj
        FPoly term = fp_mul(F, to_fpoly(ctx, residues[j]), eg.s);
        term = fp_mod(F, std::move(term), mj);
        term = fp_mul(F, term, Mj);
        acc = fp_add(F, acc, term);
    }
    acc = fp_mod(F, std::move(acc), M);
    return from_fpoly(ctx, acc);
}

bool residue_is_unit(const TowerCtx& ctx, const Residue& r,
                     const CycloFactor& f) {
    const Field& F = baseF(ctx);
    const FPoly rem = fp_mod(F, to_fpoly(ctx, r), to_fpoly(ctx, f.coeffs));
    return fp_deg(rem) >= 0;
}

}  // namespace linperm
