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

#include "linperm/cyclring.hpp"

using namespace linperm;

namespace {

// Odometer over all s-coefficient vectors with entries < q (prime q only);
// used as an enumeration oracle for unit counts.
bool next_vec(std::vector<u64>& v, u64 q) {
    for (auto& c : v) {
        if (++c < q) return true;
        c = 0;
    }
    return false;
}

RPoly rp_of(const TowerCtx& ctx, const std::vector<u64>& v) {
    std::vector<FFElem> c;
    for (u64 x : v) c.push_back(ctx.from_int(Level::base_q, x));
    return rp_make(ctx, std::move(c));
}

}  // namespace

TEST_CASE("ring arithmetic in R_{3,6}") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 1, 6, 1);
    const RPoly x = rp_x(ctx);
    // x^6 = 1 in R_{3,6}.
    RPoly p = rp_one(ctx);
    for (int i = 0; i < 6; ++i) p = rp_mul(ctx, p, x);
    CHECK(rp_eq(p, rp_one(ctx)));
    Rng rng(5);
    const RPoly a = rp_random(ctx, rng);
    const RPoly b = rp_random(ctx, rng);
    const RPoly c = rp_random(ctx, rng);
    CHECK(rp_eq(rp_mul(ctx, a, rp_add(ctx, b, c)),
                rp_add(ctx, rp_mul(ctx, a, b), rp_mul(ctx, a, c))));
    CHECK(rp_eq(rp_mul(ctx, a, b), rp_mul(ctx, b, a)));
}

TEST_CASE("units and inverses") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 1, 6, 2);
    // x - 1 divides x^6 - 1, so x + 2 is a zero divisor.
    CHECK_FALSE(is_unit(ctx, rp_of(ctx, {2, 1, 0, 0, 0, 0})));
    CHECK_THROWS_AS(rp_inv(ctx, rp_of(ctx, {2, 1, 0, 0, 0, 0})), DomainError);
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const RPoly u = rp_random_unit(ctx, rng);
        CHECK(is_unit(ctx, u));
        CHECK(rp_eq(rp_mul(ctx, u, rp_inv(ctx, u)), rp_one(ctx)));
    }
}

TEST_CASE("factorization of x^6 - 1 over F_3") {
    const TowerCtx ctx = TowerCtx::make(3, 1, 1, 6, 3);
    const CycloFactorization fac = factor_cyclotomic(ctx);
    // x^6 - 1 = (x - 1)^3 (x + 1)^3 over F_3.
    REQUIRE(fac.factors.size() == 2);
    for (const auto& f : fac.factors) {
        CHECK(f.degree == 1);
        CHECK(f.mult == 3);
    }
    // Product of f_j^{s_j} equals x^6 - 1: check by multiplying out in R...
    // lifted F_q[x] arithmetic via the base field.
    const Field& F = ctx.field(Level::base_q);
    FPoly prod = {F.one()};
    for (const auto& f : fac.factors) {
        FPoly lift;
        for (const auto& c : f.coeffs) lift.push_back(c.coeffs);
        for (unsigned k = 0; k < f.mult; ++k) prod = fp_mul(F, prod, lift);
    }
    FPoly target(7, F.zero());
    target[0] = F.neg(F.one());
    target[6] = F.one();
    CHECK(prod == target);
}

TEST_CASE("factorization of x^3 - 1 over F_2") {
    const TowerCtx ctx = TowerCtx::make(2, 1, 1, 3, 4);
    const CycloFactorization fac = factor_cyclotomic(ctx);
    // (x + 1)(x^2 + x + 1), both multiplicity 1.
    REQUIRE(fac.factors.size() == 2);
    unsigned degs = 0;
    for (const auto& f : fac.factors) {
        CHECK(f.mult == 1);
        degs += f.degree;
    }
    CHECK(degs == 3);
}

TEST_CASE("unit count formula matches enumeration") {
    struct Case {
        u64 p;
        unsigned s;
    };
    for (const Case c : {Case{3, 6}, Case{2, 2}, Case{2, 3}, Case{5, 3}}) {
        const TowerCtx ctx = TowerCtx::make(c.p, 1, 1, c.s, 5);
        const mpz_class formula = unit_group_size(ctx, factor_cyclotomic(ctx));
        u64 count = 0;
        std::vector<u64> v(c.s, 0);
        do {
            if (is_unit(ctx, rp_of(ctx, v))) ++count;
        } while (next_vec(v, c.p));
        CHECK(formula == count);
    }
    // Frozen value from the enumeration above: 324 units among the 729
    // elements of R_{3,6}.
    const TowerCtx ctx = TowerCtx::make(3, 1, 1, 6, 5);
    CHECK(unit_group_size(ctx, factor_cyclotomic(ctx)) == 324);
}

TEST_CASE("CRT split and join round-trip") {
    for (const auto& [p, s] : std::vector<std::pair<u64, unsigned>>{
             {3, 6}, {2, 4}, {5, 3}, {2, 7}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, 1, s, 8);
        const CycloFactorization fac = factor_cyclotomic(ctx);
        Rng rng(9);
        for (int i = 0; i < 15; ++i) {
            const RPoly a = rp_random(ctx, rng);
            const auto res = crt_split(ctx, a, fac);
            CHECK(rp_eq(crt_join(ctx, res, fac), a));
            // Unit iff every local residue is a unit.
            bool all_units = true;
            for (size_t j = 0; j < res.size(); ++j)
                all_units = all_units &&
                            residue_is_unit(ctx, res[j], fac.factors[j]);
            CHECK(all_units == is_unit(ctx, a));
        }
    }
}

TEST_CASE("evaluation at one") {
    const TowerCtx ctx = TowerCtx::make(5, 1, 1, 3, 1);
    const RPoly a = rp_of(ctx, {1, 2, 3});
    CHECK(rp_eval_one(ctx, a) == ctx.from_int(Level::base_q, 6));
}
