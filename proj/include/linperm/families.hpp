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

#include "linperm/iso.hpp"

namespace linperm {

/// PP families as psi-images of matrix groups: PP = psi(GL), SPP = psi(SL),
/// BPP = psi(Borel), SBPP = psi(SL intersect Borel), DPP = psi(diagonal GL),
/// SDPP = psi(SL intersect diagonal).
enum class FamilyTag { PP, SPP, BPP, SBPP, DPP, SDPP };

const char* family_name(FamilyTag t);
std::optional<FamilyTag> family_from_name(const std::string& s);

struct FamilyGenResult {
    LinPoly f;
    RMatrix cert;  // the matrix whose psi-image f is
};

/// Composition of t random transvection images; det(phi(f)) = 1.
LinPoly gen_spp(const TowerCtx& ctx, const NormalPair& pair, unsigned t,
                Rng& rng);

/// psi(D_1(t+1)) composed with an SPP h; t+1 must be a unit.
LinPoly gen_pp(const TowerCtx& ctx, const NormalPair& pair, const LinPoly& h,
               const RPoly& t);

FamilyGenResult gen_bpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng);
FamilyGenResult gen_sbpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng);
FamilyGenResult gen_dpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng);
FamilyGenResult gen_sdpp(const TowerCtx& ctx, const NormalPair& pair, Rng& rng);

/// Membership tags of f, via phi and the matrix-group classification.
/// Empty when f is not a permutation polynomial.
std::set<FamilyTag> classify_family(const TowerCtx& ctx, const LinPoly& f,
                                    const NormalPair& pair);

// Exact group orders, from the factorization of x^s - 1 over F_q.
mpz_class size_units(const TowerCtx& ctx);
mpz_class size_gl(const TowerCtx& ctx);
mpz_class size_sl(const TowerCtx& ctx);
mpz_class size_borel(const TowerCtx& ctx);
mpz_class size_diag(const TowerCtx& ctx);

}  // namespace linperm
