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

#include <optional>

#include "linperm/fields.hpp"

namespace linperm {

/// A normal element alpha of F_{q^m}/F_q together with the generator u of
/// the dual normal basis: Tr(alpha^{q^i} u^{q^j}) = delta_ij.
///
/// The pair also carries a frame for the top extension: beta generates a
/// normal basis of F_{q^n}/F_{q^m} (the s conjugates beta^{q^{m i}} form an
/// F_{q^m}-basis) and v generates its dual, Tr_{n/m}(beta^{q^{m i}} v) =
/// delta_{i0}.  The products alpha^{q^{j-1}} beta^{q^{m i}} then form an
/// F_q-basis of F_{q^n} on which the matrix representation of a q-polynomial
/// with F_{q^m} coefficients is computed.  The frame is derived
/// deterministically from the context, so equal contexts yield equal frames.
struct NormalPair {
    FFElem alpha;
    FFElem u;
    bool self_dual = false;
    FFElem beta;
    FFElem v;
};

/// true iff the m Frobenius conjugates of alpha are F_q-independent
/// (nonsingular trace Gram matrix).
bool is_normal(const TowerCtx& ctx, const FFElem& alpha);

/// Dual normal basis generator for a normal alpha, by solving the m x m
/// system Tr(alpha^{q^i} u^{q^j}) = delta_ij over F_q.
NormalPair dual_basis(const TowerCtx& ctx, const FFElem& alpha);

/// Full delta check of the duality invariant; when the pair carries a top
/// frame, the relative duality Tr_{n/m}(beta^{q^{m i}} v) = delta_{i0} is
/// checked as well.
bool is_dual_pair(const TowerCtx& ctx, const NormalPair& pair);

/// true iff the s conjugates beta^{q^{m i}} are F_{q^m}-independent.
bool is_normal_over_mid(const TowerCtx& ctx, const FFElem& beta);

/// Fills pair.beta and pair.v with the canonical top frame of the context:
/// a deterministic seeded search for a normal element of F_{q^n}/F_{q^m}
/// followed by a Gram solve for the dual generator.
void attach_top_frame(const TowerCtx& ctx, NormalPair& pair);

/// Seeded random search for a normal element (existence is guaranteed).
FFElem find_normal(const TowerCtx& ctx, Rng& rng);

/// Existence condition for a self-dual normal basis of F_{q^m}/F_q:
/// both m and q odd, or q even and 4 does not divide m.
bool self_dual_exists(u64 p, unsigned m);

/// Seeded random search; nullopt when no self-dual normal basis exists.
/// Throws SearchExhausted (distinct from the absent case) on a failed search.
std::optional<NormalPair> find_self_dual_normal(const TowerCtx& ctx, Rng& rng);

}  // namespace linperm
