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

#include "linperm/iso.hpp"

using namespace linperm;

namespace {

NormalPair pair_of(const TowerCtx& ctx, u64 seed) {
    Rng rng(seed);
    return dual_basis(ctx, find_normal(ctx, rng));
}

}  // namespace

TEST_CASE("coefficient recovery from values") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 3, 2, 1);
    const NormalPair pair = pair_of(ctx, 2);
    Rng rng(3);
    // Pick random coefficients of h(x) = sum a_r x^{q^r} on F_{q^m} and
    // recover them from the values at the basis conjugates.
    std::vector<FFElem> a;
    for (unsigned r = 0; r < ctx.m(); ++r)
        a.push_back(ctx.random(Level::mid_qm, rng));
    std::vector<FFElem> values;
    for (unsigned l = 0; l < ctx.m(); ++l) {
        FFElem v = ctx.zero(Level::mid_qm);
        const FFElem al = ctx.frobenius_q(pair.alpha, l);
        for (unsigned r = 0; r < ctx.m(); ++r)
            v = ctx.add(v, ctx.mul(a[r], ctx.frobenius_q(al, r)));
        values.push_back(v);
    }
    CHECK(coeffs_from_values(ctx, values, pair) == a);
}

TEST_CASE("phi and psi are mutually inverse") {
    for (const auto& [p, m, s] : std::vector<std::tuple<u64, unsigned, unsigned>>{
             {2, 2, 2}, {2, 3, 2}, {3, 2, 3}, {5, 2, 2}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, s, 4);
        const NormalPair pair = pair_of(ctx, 5);
        Rng rng(6);
        for (int i = 0; i < 20; ++i) {
            const RMatrix A = mat_random(ctx, rng);
            CHECK(phi(ctx, psi(ctx, A, pair), pair) == A);
            const LinPoly f = lp_random(ctx, rng);
            CHECK(psi(ctx, phi(ctx, f, pair), pair) == f);
        }
    }
}

TEST_CASE("psi is an algebra isomorphism") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 7);
    const NormalPair pair = pair_of(ctx, 8);
    Rng rng(9);
    CHECK(psi(ctx, mat_identity(ctx), pair) == lp_x(ctx));
    for (int i = 0; i < 20; ++i) {
        const RMatrix A = mat_random(ctx, rng);
        const RMatrix B = mat_random(ctx, rng);
        CHECK(psi(ctx, mat_add(ctx, A, B), pair) ==
              lp_add(ctx, psi(ctx, A, pair), psi(ctx, B, pair)));
        CHECK(psi(ctx, mat_mul(ctx, A, B), pair) ==
              lp_compose(ctx, psi(ctx, A, pair), psi(ctx, B, pair)));
    }
}

TEST_CASE("permutations correspond to invertible matrices") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 3, 2, 17);
    const NormalPair pair = pair_of(ctx, 18);
    Rng rng(19);
    for (int i = 0; i < 40; ++i) {
        const RMatrix A = mat_random(ctx, rng);
        CHECK(is_unit(ctx, det(ctx, A)) ==
              is_permutation(ctx, psi(ctx, A, pair)));
    }
}

TEST_CASE("closed forms match the generic psi path over R_{2,2}") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 10);
    const NormalPair pair = pair_of(ctx, 11);
    // Exhaust all four elements c of R_{2,2}.
    for (u64 bits = 0; bits < 4; ++bits) {
        const RPoly c = rp_make(
            ctx, {ctx.from_int(Level::base_q, bits & 1),
                  ctx.from_int(Level::base_q, (bits >> 1) & 1)});
        for (unsigned j = 1; j <= 2; ++j)
            for (unsigned k = 1; k <= 2; ++k) {
                RMatrix U = mat_zero(ctx);
                U.e[j - 1][k - 1] = c;
                CHECK(psi_unit(ctx, j, k, c, pair) == psi(ctx, U, pair));
                if (j != k)
                    CHECK(psi_transvection(ctx, j, k, c, pair) ==
                          psi(ctx, transvection(ctx, j, k, c), pair));
                else if (is_unit(ctx, c))
                    CHECK(psi_dilation(ctx, j, c, pair) ==
                          psi(ctx, dilation(ctx, j, c), pair));
            }
    }
}

TEST_CASE("closed forms match on random c over R_{3,3}") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 12);
    const NormalPair pair = pair_of(ctx, 13);
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        const RPoly c = rp_random(ctx, rng);
        for (unsigned j = 1; j <= 2; ++j)
            for (unsigned k = 1; k <= 2; ++k) {
                RMatrix U = mat_zero(ctx);
                U.e[j - 1][k - 1] = c;
                CHECK(psi_unit(ctx, j, k, c, pair) == psi(ctx, U, pair));
            }
        const RPoly u = rp_random_unit(ctx, rng);
        CHECK(psi_dilation(ctx, 1, u, pair) ==
              psi(ctx, dilation(ctx, 1, u), pair));
        CHECK(psi_transvection(ctx, 2, 1, c, pair) ==
              psi(ctx, transvection(ctx, 2, 1, c), pair));
    }
}

TEST_CASE("closed-form argument validation") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 15);
    const NormalPair pair = pair_of(ctx, 16);
    CHECK_THROWS_AS(psi_transvection(ctx, 1, 1, rp_one(ctx), pair),
                    DomainError);
    CHECK_THROWS_AS(psi_dilation(ctx, 1, rp_zero(ctx), pair), DomainError);
    CHECK_THROWS_AS(psi_unit(ctx, 0, 1, rp_one(ctx), pair), DomainError);
    CHECK_THROWS_AS(psi_unit(ctx, 1, 3, rp_one(ctx), pair), DomainError);
}
