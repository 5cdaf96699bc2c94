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

#pragma once

#include <string>
#include <vector>

#include "linperm/families.hpp"
#include "linperm/twoprime.hpp"

namespace linperm {

// Worked examples with fully pinned inputs (moduli, bases, coefficients),
// rebuilt from scratch and compared against their published values.  Each
// sub-check reports its own verdict so that a single stale published value
// does not hide the checks that do hold.

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // what was expected vs what was computed
};

struct GoldenReport {
    std::string example;
    std::vector<GoldenCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// F_8 = F_2[x]/<x^3+x^2+1>, alpha the class of x, G = G_0 + I x in
/// M_3(R_{2,2}); psi(G) = x^8 + a^5 x^4 + a^5 x^2 + a^6 x, a PP of F_64.
GoldenReport golden_ex1();

/// F_27 = F_3[x]/<x^3+2x+1>, gamma the class of x, alpha = gamma^2,
/// u = gamma^21; diagonal matrix with entries x^2+x+2, x^2+1, x^4+1 in
/// R_{3,6}; its psi image is a BPP of F_{3^18} with twelve published
/// coefficients given as powers of gamma.
GoldenReport golden_bpp3();

/// q = 5, p = 3: F_25 = F_5[x]/<x^2+4x+2>, u = alpha^4, prescribed
/// coefficients as published; checks the published determinant value,
/// excluded set, sufficient-criterion verdict, and permutation claim.
GoldenReport golden_finalex();

/// Dispatch by name ("ex1", "bpp3", "finalex"); throws DomainError on an
/// unknown name.
GoldenReport golden_run(const std::string& name);

}  // namespace linperm
