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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linperm/families.hpp"

using namespace linperm;

namespace {

NormalPair pair_of(const TowerCtx& ctx, u64 seed) {
    Rng rng(seed);
    return dual_basis(ctx, find_normal(ctx, rng));
}

// Enumeration oracle: counts of each class among all m x m matrices over
// R_{q,s} (prime q and tiny sizes only).
struct Census {
    u64 gl = 0, sl = 0, borel = 0, diag = 0;
};

Census enumerate_census(const TowerCtx& ctx) {
    const u64 q = ctx.p();  // e = 1 here
    const unsigned m = ctx.m(), s = ctx.s();
    const unsigned cells = m * m * s;
    std::vector<u64> v(cells, 0);
    Census census;
    while (true) {
        RMatrix A = mat_zero(ctx);
        for (unsigned j = 0; j < m; ++j)
            for (unsigned k = 0; k < m; ++k)
                for (unsigned i = 0; i < s; ++i)
                    A.e[j][k][i] =
                        ctx.from_int(Level::base_q, v[(j * m + k) * s + i]);
        const auto cls = classify(ctx, A);
        if (cls.count(MatClass::GL)) ++census.gl;
        if (cls.count(MatClass::SL)) ++census.sl;
        if (cls.count(MatClass::GL) && cls.count(MatClass::Borel))
            ++census.borel;
        if (cls.count(MatClass::GL) && cls.count(MatClass::Diagonal))
            ++census.diag;
        unsigned pos = 0;
        while (pos < cells && ++v[pos] == q) v[pos++] = 0;
        if (pos == cells) break;
    }
    return census;
}

}  // namespace

TEST_CASE("census at (q,m,s) = (2,2,2) matches the formulas") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 1);
    const Census census = enumerate_census(ctx);  // all 256 matrices
    CHECK(census.gl == 96);
    CHECK(census.sl == 48);
    CHECK(census.borel == 16);
    CHECK(census.diag == 4);
    CHECK(size_gl(ctx) == census.gl);
    CHECK(size_sl(ctx) == census.sl);
    CHECK(size_borel(ctx) == census.borel);
    CHECK(size_diag(ctx) == census.diag);
    CHECK(size_units(ctx) == 2);
}

TEST_CASE("census at (q,m,s) = (3,2,1) matches the formulas") {
    // s = 1 collapses R_{q,s} to F_3; GL_2(F_3) has order 48.
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 1, 1);
    const Census census = enumerate_census(ctx);
    CHECK(census.gl == 48);
    CHECK(size_gl(ctx) == census.gl);
    CHECK(size_sl(ctx) == census.sl);
    CHECK(size_borel(ctx) == census.borel);
    CHECK(size_diag(ctx) == census.diag);
}

TEST_CASE("size consistency relations") {
    for (const auto& [p, m, s] : std::vector<std::tuple<u64, unsigned, unsigned>>{
             {2, 2, 3}, {3, 3, 2}, {5, 2, 4}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, s, 2);
        CHECK(size_gl(ctx) == size_sl(ctx) * size_units(ctx));
        CHECK(size_borel(ctx) % size_diag(ctx) == 0);
        mpz_class um;
        mpz_pow_ui(um.get_mpz_t(), size_units(ctx).get_mpz_t(), m);
        CHECK(size_diag(ctx) == um);
    }
}

TEST_CASE("generated family members carry the right tags") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 3);
    const NormalPair pair = pair_of(ctx, 4);
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const FamilyGenResult bpp = gen_bpp(ctx, pair, rng);
        auto tags = classify_family(ctx, bpp.f, pair);
        CHECK(tags.count(FamilyTag::PP) == 1);
        CHECK(tags.count(FamilyTag::BPP) == 1);
        CHECK(phi(ctx, bpp.f, pair) == bpp.cert);

        const FamilyGenResult sbpp = gen_sbpp(ctx, pair, rng);
        tags = classify_family(ctx, sbpp.f, pair);
        CHECK(tags.count(FamilyTag::SBPP) == 1);
        CHECK(tags.count(FamilyTag::SPP) == 1);

        const FamilyGenResult dpp = gen_dpp(ctx, pair, rng);
        tags = classify_family(ctx, dpp.f, pair);
        CHECK(tags.count(FamilyTag::DPP) == 1);

        const FamilyGenResult sdpp = gen_sdpp(ctx, pair, rng);
        tags = classify_family(ctx, sdpp.f, pair);
        CHECK(tags.count(FamilyTag::SDPP) == 1);
        CHECK(tags.count(FamilyTag::DPP) == 1);
        CHECK(tags.count(FamilyTag::SPP) == 1);
    }
}

TEST_CASE("gen_spp composes to a special permutation") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 3, 2, 6);
    const NormalPair pair = pair_of(ctx, 7);
    Rng rng(8);
    for (unsigned t : {1u, 3u, 6u}) {
        const LinPoly f = gen_spp(ctx, pair, t, rng);
        CHECK(is_permutation(ctx, f));
        const auto tags = classify_family(ctx, f, pair);
        CHECK(tags.count(FamilyTag::SPP) == 1);
        CHECK(rp_eq(det(ctx, phi(ctx, f, pair)), rp_one(ctx)));
    }
    CHECK_THROWS_AS(gen_spp(ctx, pair, 0, rng), DomainError);
}

TEST_CASE("gen_pp lifts an SPP by a unit dilation") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 2, 9);
    const NormalPair pair = pair_of(ctx, 10);
    Rng rng(11);
    const LinPoly h = gen_spp(ctx, pair, 2, rng);
    RPoly t = rp_random(ctx, rng);
    while (!is_unit(ctx, rp_add(ctx, t, rp_one(ctx)))) t = rp_random(ctx, rng);
    const LinPoly f = gen_pp(ctx, pair, h, t);
    CHECK(is_permutation(ctx, f));
    // det(phi(f)) = t + 1.
    CHECK(rp_eq(det(ctx, phi(ctx, f, pair)), rp_add(ctx, t, rp_one(ctx))));
    // t = -1 makes t + 1 = 0, which is rejected.
    RPoly minus_one = rp_neg(ctx, rp_one(ctx));
    CHECK_THROWS_AS(gen_pp(ctx, pair, h, minus_one), DomainError);
}

TEST_CASE("classify_family of a non-permutation is empty") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 12);
    const NormalPair pair = pair_of(ctx, 13);
    CHECK(classify_family(ctx, lp_zero(ctx), pair).empty());
}

TEST_CASE("family names round-trip") {
    for (FamilyTag t : {FamilyTag::PP, FamilyTag::SPP, FamilyTag::BPP,
                        FamilyTag::SBPP, FamilyTag::DPP, FamilyTag::SDPP})
        CHECK(family_from_name(family_name(t)) == t);
    CHECK_FALSE(family_from_name("nope").has_value());
}
