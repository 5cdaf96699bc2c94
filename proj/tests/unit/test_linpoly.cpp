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

#include "linperm/linpoly.hpp"

using namespace linperm;

TEST_CASE("evaluation basics") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 2, 1);
    const LinPoly id = lp_x(ctx);
    Rng rng(3);
    const FFElem v = ctx.random(Level::top_qn, rng);
    CHECK(lp_eval(ctx, id, v) == v);
    CHECK(lp_eval(ctx, lp_zero(ctx), v) == ctx.zero(Level::top_qn));
    // Additivity: f(x + y) = f(x) + f(y).
    const LinPoly f = lp_random(ctx, rng);
    const FFElem w = ctx.random(Level::top_qn, rng);
    CHECK(lp_eval(ctx, f, ctx.add(v, w)) ==
          ctx.add(lp_eval(ctx, f, v), lp_eval(ctx, f, w)));
    // F_q-homogeneity.
    const FFElem lam = ctx.embed(ctx.random(Level::base_q, rng), Level::top_qn);
    CHECK(lp_eval(ctx, f, ctx.mul(lam, v)) ==
          ctx.mul(lam, lp_eval(ctx, f, v)));
}

TEST_CASE("composition agrees with evaluation") {
    for (const auto& [p, m, s] : std::vector<std::tuple<u64, unsigned, unsigned>>{
             {2, 2, 2}, {3, 2, 3}, {2, 3, 2}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, s, 5);
        Rng rng(7);
        for (int i = 0; i < 10; ++i) {
            const LinPoly f = lp_random(ctx, rng);
            const LinPoly g = lp_random(ctx, rng);
            const LinPoly fg = lp_compose(ctx, f, g);
            for (int j = 0; j < 10; ++j) {
                const FFElem v = ctx.random(Level::top_qn, rng);
                CHECK(lp_eval(ctx, fg, v) ==
                      lp_eval(ctx, f, lp_eval(ctx, g, v)));
            }
        }
    }
}

TEST_CASE("composition is associative with identity x") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 2, 9);
    Rng rng(11);
    const LinPoly f = lp_random(ctx, rng);
    const LinPoly g = lp_random(ctx, rng);
    const LinPoly h = lp_random(ctx, rng);
    CHECK(lp_compose(ctx, f, lp_x(ctx)) == f);
    CHECK(lp_compose(ctx, lp_x(ctx), f) == f);
    CHECK(lp_compose(ctx, lp_compose(ctx, f, g), h) ==
          lp_compose(ctx, f, lp_compose(ctx, g, h)));
}

TEST_CASE("block split and join round-trip") {
    const TowerCtx ctx = TowerCtx::make(5, 1, 2, 3, 13);
    Rng rng(17);
    const LinPoly f = lp_random(ctx, rng);
    const auto blocks = split_blocks(ctx, f);
    REQUIRE(blocks.size() == ctx.s());
    for (const auto& b : blocks) CHECK(b.size() == ctx.m());
    CHECK(join_blocks(ctx, blocks) == f);
    // Evaluation identity: f(v) = sum_i g_i(v^{q^{m i}}).
    const FFElem v = ctx.random(Level::top_qn, rng);
    FFElem sum = ctx.zero(Level::top_qn);
    for (unsigned i = 0; i < ctx.s(); ++i) {
        const FFElem vi = ctx.frobenius_q(v, i * ctx.m());
        for (unsigned r = 0; r < ctx.m(); ++r)
            sum = ctx.add(sum,
                          ctx.mul(ctx.embed(blocks[i][r], Level::top_qn),
                                  ctx.frobenius_q(vi, r)));
    }
    CHECK(sum == lp_eval(ctx, f, v));
}

TEST_CASE("matrix of the map agrees with evaluation") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 3, 2, 19);
    Rng rng(23);
    const LinPoly f = lp_random(ctx, rng);
    const PMatrix M = lp_matrix(ctx, f);
    for (int i = 0; i < 20; ++i) {
        const FFElem v = ctx.random(Level::top_qn, rng);
        const std::vector<u64> img = pmat_apply(M, v.coeffs, ctx.p());
        CHECK(img == lp_eval(ctx, f, v).coeffs);
    }
}

TEST_CASE("kernel test agrees with brute force") {
    for (const auto& [p, m, s] : std::vector<std::tuple<u64, unsigned, unsigned>>{
             {2, 2, 2}, {3, 2, 2}, {2, 3, 2}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, s, 29);
        Rng rng(31);
        unsigned pps = 0;
        for (int i = 0; i < 60; ++i) {
            const LinPoly f = lp_random(ctx, rng);
            const bool kernel = is_permutation(ctx, f);
            CHECK(kernel == is_permutation_bruteforce(ctx, f));
            if (kernel) ++pps;
        }
        CHECK(pps > 0);  // the sample should contain some permutations
    }
}

TEST_CASE("trivial permutation facts") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 1);
    CHECK(is_permutation(ctx, lp_x(ctx)));
    CHECK_FALSE(is_permutation(ctx, lp_zero(ctx)));
    // x^q permutes (it is the Frobenius automorphism).
    LinPoly frob = lp_zero(ctx);
    frob.a[1] = ctx.one(Level::mid_qm);
    CHECK(is_permutation(ctx, frob));
}

TEST_CASE("brute force respects its bound") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 1);  // 3^6 = 729 elements
    CHECK_THROWS_AS(is_permutation_bruteforce(ctx, lp_x(ctx), 100),
                    DomainError);
    CHECK(is_permutation_bruteforce(ctx, lp_x(ctx), 1000));
}
