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

#include "linperm/nbasis.hpp"

using namespace linperm;

TEST_CASE("normality in F_8 over F_2 with the pinned modulus") {
    const TowerCtx ctx =
        TowerCtx::make_with_moduli(2, 1, 3, 2, 1, {}, {1, 0, 1, 1}, {});
    const FFElem a = ctx.gen(Level::mid_qm);
    CHECK(is_normal(ctx, a));
    // 1 is never normal for m > 1 (its conjugates coincide).
    CHECK_FALSE(is_normal(ctx, ctx.one(Level::mid_qm)));
    CHECK_FALSE(is_normal(ctx, ctx.zero(Level::mid_qm)));
    // The class of x is self-dual here.
    const NormalPair pair = dual_basis(ctx, a);
    CHECK(pair.self_dual);
    CHECK(pair.u == a);
    CHECK(is_dual_pair(ctx, pair));
}

TEST_CASE("dual basis satisfies the delta identity") {
    for (const auto& [p, m] : std::vector<std::pair<u64, unsigned>>{
             {3, 3}, {5, 2}, {2, 4}, {7, 2}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, 2, 11);
        Rng rng(13);
        const FFElem a = find_normal(ctx, rng);
        REQUIRE(is_normal(ctx, a));
        const NormalPair pair = dual_basis(ctx, a);
        CHECK(is_dual_pair(ctx, pair));
        // Duality spelled out: Tr(a^{q^i} u^{q^j}) = delta_{ij}.
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) {
                const FFElem t = ctx.trace(
                    ctx.mul(ctx.frobenius_q(a, i), ctx.frobenius_q(pair.u, j)),
                    Level::base_q);
                CHECK(t == (i == j ? ctx.one(Level::base_q)
                                   : ctx.zero(Level::base_q)));
            }
    }
}

TEST_CASE("dual basis rejects non-normal elements") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 2, 1);
    CHECK_THROWS_AS(dual_basis(ctx, ctx.one(Level::mid_qm)), DomainError);
}

TEST_CASE("self-dual existence condition") {
    CHECK(self_dual_exists(3, 3));       // both odd
    CHECK(self_dual_exists(2, 3));       // q even, 4 does not divide m
    CHECK(self_dual_exists(2, 6));
    CHECK_FALSE(self_dual_exists(2, 4));  // q even, 4 | m
    CHECK_FALSE(self_dual_exists(3, 2));  // q odd, m even
}

TEST_CASE("self-dual search agrees with the existence condition") {
    {
        const TowerCtx ctx = TowerCtx::make(3, 1, 3, 2, 21);
        Rng rng(23);
        const auto pair = find_self_dual_normal(ctx, rng);
        REQUIRE(pair.has_value());
        CHECK(pair->self_dual);
        CHECK(pair->u == pair->alpha);
        CHECK(is_dual_pair(ctx, *pair));
    }
    {
        const TowerCtx ctx = TowerCtx::make(2, 1, 4, 2, 21);
        Rng rng(23);
        CHECK_FALSE(find_self_dual_normal(ctx, rng).has_value());
    }
}

TEST_CASE("random normal search is deterministic under a seed") {
    const TowerCtx ctx = TowerCtx::make(5, 1, 3, 2, 31);
    Rng r1(37), r2(37);
    CHECK(find_normal(ctx, r1) == find_normal(ctx, r2));
}
