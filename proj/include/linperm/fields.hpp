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

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linperm/fpoly.hpp"
#include "linperm/gf.hpp"

namespace linperm {

// The four levels of the tower F_p < F_q < F_{q^m} < F_{q^n}, n = m*s.
enum class Level : unsigned { prime = 0, base_q = 1, mid_qm = 2, top_qn = 3 };

inline const char* level_name(Level l) {
    switch (l) {
        case Level::prime: return "prime";
        case Level::base_q: return "base_q";
        case Level::mid_qm: return "mid_qm";
        case Level::top_qn: return "top_qn";
    }
    return "?";
}

std::optional<Level> level_from_name(const std::string& s);

/// One element of one field in the tower: a coefficient vector over F_p
/// tagged with its level.
struct FFElem {
    Level level = Level::prime;
    Field::Elem coeffs;

    bool operator==(const FFElem&) const = default;
};

using PMatrix = std::vector<std::vector<u64>>;  // matrix over F_p, row-major

/// Matrix (over F_p) of multiplication by a, in the power basis of F.
PMatrix mult_matrix(const Field& F, const Field::Elem& a);

/// Solves E x = v over F_p for a possibly non-square E; nullopt when v is
/// outside the column span.
std::optional<std::vector<u64>> pmat_solve(const PMatrix& E, std::vector<u64> v,
                                           u64 p);

PMatrix pmat_identity(unsigned d);
std::vector<u64> pmat_apply(const PMatrix& M, const std::vector<u64>& v, u64 p);
PMatrix pmat_mul(const PMatrix& A, const PMatrix& B, u64 p);
PMatrix pmat_add(const PMatrix& A, const PMatrix& B, u64 p);
unsigned pmat_rank(PMatrix M, u64 p);

// ---------------------------------------------------------------------------
// The parameter triple (q = p^e, m, s) with defining polynomials for each
// level and embedding maps between levels.  Immutable after construction.

class TowerCtx {
  public:
    /// Randomized search for defining polynomials; deterministic given seed.
    static TowerCtx make(u64 p, unsigned e, unsigned m, unsigned s, u64 seed);

    /// As make(), but with caller-supplied moduli (any may be empty to fall
    /// back to search).  Used to reproduce printed examples bit-exactly.
    static TowerCtx make_with_moduli(u64 p, unsigned e, unsigned m, unsigned s,
                                     u64 seed, PPoly base_mod, PPoly mid_mod,
                                     PPoly top_mod);

    u64 p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned m() const { return m_; }
    unsigned s() const { return s_; }
    /// n = m*s, the q-degree of the top field.
    unsigned n() const { return m_ * s_; }
    u64 seed() const { return seed_; }
    mpz_class q() const;

    const Field& field(Level l) const { return fields_[idx(l)]; }
    unsigned degree(Level l) const { return fields_[idx(l)].degree(); }
    mpz_class level_size(Level l) const { return fields_[idx(l)].size(); }

    FFElem zero(Level l) const { return {l, field(l).zero()}; }
    FFElem one(Level l) const { return {l, field(l).one()}; }
    /// The residue class of the defining variable at level l.
    FFElem gen(Level l) const { return {l, field(l).gen()}; }
    FFElem from_int(Level l, u64 c) const { return {l, field(l).from_int(c)}; }
    FFElem make_elem(Level l, std::vector<u64> coeffs) const;
    FFElem random(Level l, Rng& rng) const { return {l, field(l).random(rng)}; }

    bool is_zero(const FFElem& a) const;
    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem inv(const FFElem& a) const;
    FFElem pow(const FFElem& a, const mpz_class& k) const;
    FFElem pow_u(const FFElem& a, u64 k) const;

    /// a^{q^k} within a's level.
    FFElem frobenius_q(const FFElem& a, unsigned k) const;

    /// Inclusion into a higher level.
    FFElem embed(const FFElem& a, Level up) const;
    /// Inverse of embed; throws DomainError when a is not in the subfield.
    FFElem project(const FFElem& a, Level down) const;

    /// Relative trace from a's level down to `to`: sum of a^{t^k} over the
    /// relative Frobenius, t = |field at `to`|.
    FFElem trace(const FFElem& a, Level to) const;

    /// A primitive element of level l, available when the level size fits
    /// the discrete-log table bound (2^20).
    std::optional<FFElem> primitive(Level l) const;
    /// Discrete log base primitive(l); nullopt when no table or a = 0.
    std::optional<u64> dlog(const FFElem& a) const;
    /// primitive(l)^k; throws when no primitive is registered.
    FFElem primitive_power(Level l, u64 k) const;

    /// Matrix over F_p of x -> x^q on level l (identity at the prime level).
    const PMatrix& frob_q_matrix(Level l) const { return frob_q_[idx(l)]; }

  private:
    TowerCtx() = default;
    static size_t idx(Level l) { return static_cast<size_t>(l); }
    void finish_init(Rng& rng);
    const Field& check_pair(const FFElem& a, const FFElem& b) const;

    u64 p_ = 0;
    unsigned e_ = 0, m_ = 0, s_ = 0;
    u64 seed_ = 0;
    std::array<Field, 4> fields_;
    // emb_[a][b]: degree(b) x degree(a) matrix embedding level a into level b,
    // for a < b (unused entries stay empty).
    std::array<std::array<PMatrix, 4>, 4> emb_;
    std::array<PMatrix, 4> frob_q_;
    std::array<std::optional<FFElem>, 4> primitive_;
    std::array<std::unordered_map<u64, u64>, 4> dlog_;  // encoded elem -> k
};

}  // namespace linperm
