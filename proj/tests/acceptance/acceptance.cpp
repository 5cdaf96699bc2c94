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

// Acceptance gate: one line of output per criterion.  Exits nonzero when any
// criterion fails.  Criteria that compare against published values report
// the published claim as-is; known-stale published values are not patched
// over, they fail here with the computed value shown.

#include <iostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "linperm/golden.hpp"

using namespace linperm;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass,
            const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << num << ": "
              << name;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::string failed_checks(const GoldenReport& rep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : rep.checks)
        if (!c.pass) {
            if (!first) os << "; ";
            first = false;
            os << c.name;
            if (!c.detail.empty()) os << " [" << c.detail << "]";
        }
    return os.str();
}

NormalPair pair_of(const TowerCtx& ctx, u64 seed) {
    Rng rng(seed);
    return dual_basis(ctx, find_normal(ctx, rng));
}

void criterion_golden(int num, const std::string& name,
                      const GoldenReport& rep) {
    report(num, name, rep.all_pass(), failed_checks(rep));
}

void criterion4_census() {
    bool ok = true;
    std::ostringstream note;
    {
        const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 1);
        u64 gl = 0, sl = 0, borel = 0, diag = 0;
        std::vector<u64> v(8, 0);  // 2^8 = 256 matrices over R_{2,2}
        while (true) {
            RMatrix A = mat_zero(ctx);
            for (unsigned j = 0; j < 2; ++j)
                for (unsigned k = 0; k < 2; ++k)
                    for (unsigned i = 0; i < 2; ++i)
                        A.e[j][k][i] = ctx.from_int(Level::base_q,
                                                    v[(j * 2 + k) * 2 + i]);
            const auto cls = classify(ctx, A);
            if (cls.count(MatClass::GL)) ++gl;
            if (cls.count(MatClass::SL)) ++sl;
            if (cls.count(MatClass::GL) && cls.count(MatClass::Borel)) ++borel;
            if (cls.count(MatClass::GL) && cls.count(MatClass::Diagonal))
                ++diag;
            unsigned pos = 0;
            while (pos < 8 && ++v[pos] == 2) v[pos++] = 0;
            if (pos == 8) break;
        }
        ok = ok && gl == 96 && sl == 48 && borel == 16 && diag == 4;
        ok = ok && size_gl(ctx) == gl && size_sl(ctx) == sl &&
             size_borel(ctx) == borel && size_diag(ctx) == diag &&
             size_units(ctx) == 2;
        note << "gl=" << gl << " sl=" << sl << " borel=" << borel
             << " diag=" << diag;
    }
    {
        const TowerCtx ctx = TowerCtx::make(3, 1, 1, 6, 1);
        u64 units = 0;
        std::vector<u64> v(6, 0);  // 3^6 = 729 ring elements
        while (true) {
            std::vector<FFElem> c;
            for (u64 x : v) c.push_back(ctx.from_int(Level::base_q, x));
            if (is_unit(ctx, rp_make(ctx, std::move(c)))) ++units;
            unsigned pos = 0;
            while (pos < 6 && ++v[pos] == 3) v[pos++] = 0;
            if (pos == 6) break;
        }
        ok = ok && units == 324 && size_units(ctx) == units;
        note << " units(R_3_6)=" << units;
    }
    report(4, "counting census", ok, note.str());
}

void criterion5_iso_laws() {
    bool ok = true;
    for (const auto& [p, m, s] :
         std::vector<std::tuple<u64, unsigned, unsigned>>{
             {2, 2, 2}, {2, 3, 2}, {3, 2, 3}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, s, 17);
        const NormalPair pair = pair_of(ctx, 18);
        Rng rng(19);
        ok = ok && psi(ctx, mat_identity(ctx), pair) == lp_x(ctx);
        for (int i = 0; i < 200 && ok; ++i) {
            const RMatrix A = mat_random(ctx, rng);
            const RMatrix B = mat_random(ctx, rng);
            ok = ok &&
                 psi(ctx, mat_add(ctx, A, B), pair) ==
                     lp_add(ctx, psi(ctx, A, pair), psi(ctx, B, pair)) &&
                 psi(ctx, mat_mul(ctx, A, B), pair) ==
                     lp_compose(ctx, psi(ctx, A, pair), psi(ctx, B, pair)) &&
                 phi(ctx, psi(ctx, A, pair), pair) == A;
        }
    }
    report(5, "isomorphism laws (200 random pairs at three sizes)", ok);
}

void criterion6_closed_forms() {
    bool ok = true;
    {
        const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 20);
        const NormalPair pair = pair_of(ctx, 21);
        for (u64 bits = 0; bits < 4 && ok; ++bits) {
            const RPoly c = rp_make(
                ctx, {ctx.from_int(Level::base_q, bits & 1),
                      ctx.from_int(Level::base_q, (bits >> 1) & 1)});
            for (unsigned j = 1; j <= 2 && ok; ++j)
                for (unsigned k = 1; k <= 2 && ok; ++k) {
                    RMatrix U = mat_zero(ctx);
                    U.e[j - 1][k - 1] = c;
                    ok = ok && psi_unit(ctx, j, k, c, pair) == psi(ctx, U, pair);
                    if (j != k)
                        ok = ok &&
                             psi_transvection(ctx, j, k, c, pair) ==
                                 psi(ctx, transvection(ctx, j, k, c), pair);
                    else if (is_unit(ctx, c))
                        ok = ok && psi_dilation(ctx, j, c, pair) ==
                                       psi(ctx, dilation(ctx, j, c), pair);
                }
        }
    }
    {
        const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 22);
        const NormalPair pair = pair_of(ctx, 23);
        Rng rng(24);
        for (int i = 0; i < 100 && ok; ++i) {
            const RPoly c = rp_random(ctx, rng);
            for (unsigned j = 1; j <= 2 && ok; ++j)
                for (unsigned k = 1; k <= 2 && ok; ++k) {
                    RMatrix U = mat_zero(ctx);
                    U.e[j - 1][k - 1] = c;
                    ok = ok && psi_unit(ctx, j, k, c, pair) == psi(ctx, U, pair);
                    if (j != k)
                        ok = ok &&
                             psi_transvection(ctx, j, k, c, pair) ==
                                 psi(ctx, transvection(ctx, j, k, c), pair);
                }
            const RPoly u = rp_random_unit(ctx, rng);
            for (unsigned l = 1; l <= 2 && ok; ++l)
                ok = ok && psi_dilation(ctx, l, u, pair) ==
                               psi(ctx, dilation(ctx, l, u), pair);
        }
    }
    report(6, "closed forms agree with generic psi", ok);
}

void criterion7_decomposition() {
    bool ok = true;
    {
        const TowerCtx ctx = TowerCtx::make(3, 1, 2, 3, 25);
        Rng rng(26);
        for (int i = 0; i < 100 && ok; ++i) {
            const RMatrix A = sample_gl(ctx, rng);
            RMatrix P = mat_identity(ctx);
            for (const auto& f : decompose_elementary(ctx, A))
                P = mat_mul(ctx, P, elem_to_matrix(ctx, f));
            ok = ok && P == A;
        }
    }
    {
        const TowerCtx ctx = TowerCtx::make(2, 1, 2, 2, 27);
        Rng rng(28);
        for (int i = 0; i < 100 && ok; ++i) {
            const RMatrix A = sample_sl(ctx, rng);
            RMatrix P = mat_identity(ctx);
            for (const auto& f : decompose_elementary(ctx, A)) {
                ok = ok && f.kind == ElemFactor::Kind::transvection;
                P = mat_mul(ctx, P, elem_to_matrix(ctx, f));
            }
            ok = ok && P == A;
        }
    }
    report(7, "elementary decomposition reconstructs (100 GL + 100 SL)", ok);
}

void criterion8_oracle_agreement() {
    bool ok = true;
    for (const auto& [p, m, s] :
         std::vector<std::tuple<u64, unsigned, unsigned>>{{2, 3, 2},
                                                          {5, 2, 3}}) {
        const TowerCtx ctx = TowerCtx::make(p, 1, m, s, 29);
        Rng rng(30);
        for (int i = 0; i < 500 && ok; ++i) {
            const LinPoly f = lp_random(ctx, rng);
            ok = ok && is_permutation(ctx, f) ==
                           is_permutation_bruteforce(ctx, f);
        }
    }
    report(8, "kernel and brute-force permutation tests agree (500 + 500)",
           ok);
}

void criterion9_twoprime_soundness() {
    const TowerCtx ctx = TowerCtx::make(5, 1, 2, 3, 31);
    const NormalPair pair = pair_of(ctx, 32);
    Rng rng(33);
    bool ok = true;
    unsigned fired = 0;
    for (int i = 0; i < 500 && ok; ++i) {
        PrescribedCoeffs c;
        c.p = 3;
        auto draw = [&] {
            std::vector<FFElem> v;
            for (unsigned k = 0; k < 3; ++k)
                v.push_back(ctx.random(Level::base_q, rng));
            return v;
        };
        c.f11 = draw();
        c.f12 = draw();
        c.f21 = draw();
        c.f22 = draw();
        const bool exact = is_pp_exact(ctx, c);
        const bool brute =
            is_permutation_bruteforce(ctx, assemble_g(ctx, c, pair));
        ok = ok && exact == brute;
        if (is_pp_sufficient(ctx, c) == SufficientVerdict::PP) {
            ++fired;
            ok = ok && exact && brute;
        }
    }
    report(9, "prescribed-coefficient criteria are sound (500 samples)",
           ok && fired > 0, "sufficient fired " + std::to_string(fired) +
                                " times, each confirmed");
}

}  // namespace

int main() {
    criterion_golden(1, "worked example at (q,m,s) = (2,3,2)", golden_ex1());
    criterion_golden(2, "worked example at (q,m,s) = (3,3,6)", golden_bpp3());
    criterion_golden(3, "worked example at (q,p) = (5,3)", golden_finalex());
    criterion4_census();
    criterion5_iso_laws();
    criterion6_closed_forms();
    criterion7_decomposition();
    criterion8_oracle_agreement();
    criterion9_twoprime_soundness();
    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) +
                                        " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
