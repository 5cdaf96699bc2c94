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

#include "linperm/fields.hpp"

#include <algorithm>

namespace linperm {

namespace {

constexpr u64 kDlogTableBound = 1u << 20;
constexpr unsigned kPrimitiveAttempts = 100000;

// Mixed-radix encoding of a coefficient vector; only used when p^deg fits.
u64 encode_elem(const Field::Elem& a, u64 p) {
    u64 code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

// Matrix with column j = the coefficient vector of root^j in F.
PMatrix embedding_matrix(const Field& F, const Field::Elem& root, unsigned low_deg) {
    PMatrix E(F.degree(), std::vector<u64>(low_deg, 0));
    Field::Elem pw = F.one();
    for (unsigned j = 0; j < low_deg; ++j) {
        for (unsigned i = 0; i < F.degree(); ++i) E[i][j] = pw[i];
        if (j + 1 < low_deg) pw = F.mul(pw, root);
    }
    return E;
}

}  // namespace

PMatrix pmat_identity(unsigned d) {
    PMatrix I(d, std::vector<u64>(d, 0));
    for (unsigned i = 0; i < d; ++i) I[i][i] = 1;
    return I;
}

std::vector<u64> pmat_apply(const PMatrix& M, const std::vector<u64>& v, u64 p) {
    std::vector<u64> r(M.size(), 0);
    for (size_t i = 0; i < M.size(); ++i) {
        u64 acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += M[i][j] * v[j] % p;
        r[i] = acc % p;
    }
    return r;
}

PMatrix pmat_mul(const PMatrix& A, const PMatrix& B, u64 p) {
    const size_t rows = A.size(), inner = B.size(), cols = B[0].size();
    PMatrix R(rows, std::vector<u64>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j)
                R[i][j] = (R[i][j] + A[i][k] * B[k][j]) % p;
        }
    return R;
}

PMatrix pmat_add(const PMatrix& A, const PMatrix& B, u64 p) {
    PMatrix R = A;
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = 0; j < R[i].size(); ++j)
            R[i][j] = (R[i][j] + B[i][j]) % p;
    return R;
}

unsigned pmat_rank(PMatrix M, u64 p) {
    if (M.empty()) return 0;
    const size_t rows = M.size(), cols = M[0].size();
    unsigned rank = 0;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t piv = prow;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[prow], M[piv]);
        const u64 inv = mod_inv(M[prow][col], p);
        for (size_t j = col; j < cols; ++j) M[prow][j] = M[prow][j] * inv % p;
        for (size_t r = prow + 1; r < rows; ++r) {
            if (M[r][col] == 0) continue;
            const u64 c = M[r][col];
            for (size_t j = col; j < cols; ++j)
                M[r][j] = mod_sub(M[r][j], c * M[prow][j] % p, p);
        }
        ++prow;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<u64>> pmat_solve(const PMatrix& E_in,
                                           std::vector<u64> v, u64 p) {
    PMatrix E = E_in;
    const size_t rows = E.size(), cols = E[0].size();
    std::vector<size_t> pivot_col_of_row(rows, SIZE_MAX);
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t piv = prow;
        while (piv < rows && E[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(E[prow], E[piv]);
        std::swap(v[prow], v[piv]);
        const u64 inv = mod_inv(E[prow][col], p);
        for (size_t j = col; j < cols; ++j) E[prow][j] = E[prow][j] * inv % p;
        v[prow] = v[prow] * inv % p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || E[r][col] == 0) continue;
            const u64 c = E[r][col];
            for (size_t j = col; j < cols; ++j)
                E[r][j] = mod_sub(E[r][j], c * E[prow][j] % p, p);
            v[r] = mod_sub(v[r], c * v[prow] % p, p);
        }
        pivot_col_of_row[prow] = col;
        ++prow;
    }
    for (size_t r = prow; r < rows; ++r)
        if (v[r] != 0) return std::nullopt;
    std::vector<u64> x(cols, 0);
    for (size_t r = 0; r < prow; ++r) x[pivot_col_of_row[r]] = v[r];
    return x;
}

std::optional<Level> level_from_name(const std::string& s) {
    if (s == "prime") return Level::prime;
    if (s == "base_q") return Level::base_q;
    if (s == "mid_qm") return Level::mid_qm;
    if (s == "top_qn") return Level::top_qn;
    return std::nullopt;
}

PMatrix mult_matrix(const Field& F, const Field::Elem& a) {
    const unsigned d = F.degree();
    PMatrix M(d, std::vector<u64>(d, 0));
    Field::Elem basis = F.zero();
    for (unsigned j = 0; j < d; ++j) {
        basis.assign(d, 0);
        basis[j] = 1;
        const Field::Elem img = F.mul(a, basis);
        for (unsigned i = 0; i < d; ++i) M[i][j] = img[i];
    }
    return M;
}

TowerCtx TowerCtx::make(u64 p, unsigned e, unsigned m, unsigned s, u64 seed) {
    return make_with_moduli(p, e, m, s, seed, {}, {}, {});
}

TowerCtx TowerCtx::make_with_moduli(u64 p, unsigned e, unsigned m, unsigned s,
                                    u64 seed, PPoly base_mod, PPoly mid_mod,
                                    PPoly top_mod) {
    if (!is_prime_u64(p)) throw ParseError("make_tower: p must be prime");
    if (e < 1 || m < 1 || s < 1)
        throw ParseError("make_tower: e, m, s must be positive");

    TowerCtx ctx;
    ctx.p_ = p;
    ctx.e_ = e;
    ctx.m_ = m;
    ctx.s_ = s;
    ctx.seed_ = seed;
    Rng rng(seed);

    auto pick = [&](PPoly given, unsigned deg, const PPoly& reuse) -> PPoly {
        if (!given.empty()) {
            pp_trim(given);
            if (pp_deg(given) != static_cast<int>(deg) || !pp_is_irreducible(given, p))
                throw ParseError("make_tower: supplied modulus is not irreducible "
                                 "of the required degree");
            return pp_monic(std::move(given), p);
        }
        if (pp_deg(reuse) == static_cast<int>(deg)) return reuse;
        if (deg == 1) return PPoly{0, 1};  // x, so the field is F_p itself
        return find_irreducible(p, deg, rng);
    };

    const PPoly fb = pick(std::move(base_mod), e, {});
    const PPoly fm = pick(std::move(mid_mod), e * m, fb);
    const PPoly ft = pick(std::move(top_mod), e * m * s, fm);

    ctx.fields_[idx(Level::prime)] = Field(p, PPoly{0, 1});
    ctx.fields_[idx(Level::base_q)] = Field(p, fb);
    ctx.fields_[idx(Level::mid_qm)] = Field(p, fm);
    ctx.fields_[idx(Level::top_qn)] = Field(p, ft);
    ctx.finish_init(rng);
    return ctx;
}

void TowerCtx::finish_init(Rng& rng) {
    // Embeddings between adjacent levels: locate a root of the lower
    // modulus in the upper field; matrix columns are powers of the root.
    auto adjacent = [&](Level lo, Level hi) {
        const Field& L = field(lo);
        const Field& H = field(hi);
        Field::Elem root;
        if (L.modulus() == H.modulus())
            root = H.gen();
        else
            root = root_of_irreducible(L.modulus(), H, rng);
        emb_[idx(lo)][idx(hi)] = embedding_matrix(H, root, L.degree());
    };
    adjacent(Level::prime, Level::base_q);
    adjacent(Level::base_q, Level::mid_qm);
    adjacent(Level::mid_qm, Level::top_qn);
    // Composite embeddings go through the intermediate levels so that
    // embed(a, top) == embed(embed(a, mid), top) holds exactly.
    auto compose = [&](Level lo, Level mi, Level hi) {
        emb_[idx(lo)][idx(hi)] =
            pmat_mul(emb_[idx(mi)][idx(hi)], emb_[idx(lo)][idx(mi)], p_);
    };
    compose(Level::prime, Level::base_q, Level::mid_qm);
    compose(Level::base_q, Level::mid_qm, Level::top_qn);
    compose(Level::prime, Level::mid_qm, Level::top_qn);
    for (unsigned l = 0; l < 4; ++l) emb_[l][l] = pmat_identity(degree(Level(l)));

    // q-Frobenius matrices: column j = (x^j)^q = (x^q)^j.
    const mpz_class qv = q();
    for (unsigned l = 0; l < 4; ++l) {
        const Field& F = fields_[l];
        const unsigned d = F.degree();
        if (d == 1) {
            frob_q_[l] = pmat_identity(1);
            continue;
        }
        const Field::Elem g = F.pow(F.gen(), qv);
        PMatrix M(d, std::vector<u64>(d, 0));
        Field::Elem pw = F.one();
        for (unsigned j = 0; j < d; ++j) {
            for (unsigned i = 0; i < d; ++i) M[i][j] = pw[i];
            if (j + 1 < d) pw = F.mul(pw, g);
        }
        frob_q_[l] = std::move(M);
    }

    // Primitive elements + dlog tables for levels small enough to tabulate.
    for (unsigned l = 0; l < 4; ++l) {
        const Field& F = fields_[l];
        const mpz_class sz = F.size();
        if (sz > kDlogTableBound) continue;
        const mpz_class target = sz - 1;
        Field::Elem prim;
        bool found = false;
        if (!F.is_zero(F.gen()) && F.mult_order(F.gen()) == target) {
            prim = F.gen();
            found = true;
        }
        for (unsigned att = 0; !found && att < kPrimitiveAttempts; ++att) {
            Field::Elem c = F.random(rng);
            if (F.is_zero(c)) continue;
            if (F.mult_order(c) == target) {
                prim = std::move(c);
                found = true;
            }
        }
        if (!found) throw SearchExhausted("primitive element search exhausted");
        primitive_[l] = FFElem{Level(l), prim};
        auto& table = dlog_[l];
        Field::Elem cur = F.one();
        const u64 ord = mpz_get_ui(target.get_mpz_t());
        for (u64 k = 0; k < std::max<u64>(ord, 1); ++k) {
            table.emplace(encode_elem(cur, p_), k);
            cur = F.mul(cur, prim);
        }
    }
}

mpz_class TowerCtx::q() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), e_);
    return r;
}

FFElem TowerCtx::make_elem(Level l, std::vector<u64> coeffs) const {
    return {l, field(l).make(std::move(coeffs))};
}

const Field& TowerCtx::check_pair(const FFElem& a, const FFElem& b) const {
    if (a.level != b.level)
        throw DomainError(std::string("level mismatch: ") + level_name(a.level) +
                          " vs " + level_name(b.level));
    return field(a.level);
}

bool TowerCtx::is_zero(const FFElem& a) const { return field(a.level).is_zero(a.coeffs); }

FFElem TowerCtx::add(const FFElem& a, const FFElem& b) const {
    return {a.level, check_pair(a, b).add(a.coeffs, b.coeffs)};
}

FFElem TowerCtx::sub(const FFElem& a, const FFElem& b) const {
    return {a.level, check_pair(a, b).sub(a.coeffs, b.coeffs)};
}

FFElem TowerCtx::neg(const FFElem& a) const {
    return {a.level, field(a.level).neg(a.coeffs)};
}

FFElem TowerCtx::mul(const FFElem& a, const FFElem& b) const {
    return {a.level, check_pair(a, b).mul(a.coeffs, b.coeffs)};
}

FFElem TowerCtx::inv(const FFElem& a) const {
    return {a.level, field(a.level).inv(a.coeffs)};
}

FFElem TowerCtx::pow(const FFElem& a, const mpz_class& k) const {
    return {a.level, field(a.level).pow(a.coeffs, k)};
}

FFElem TowerCtx::pow_u(const FFElem& a, u64 k) const {
    return {a.level, field(a.level).pow(a.coeffs, k)};
}

FFElem TowerCtx::frobenius_q(const FFElem& a, unsigned k) const {
    const unsigned d = degree(a.level);
    if (d == 1) return a;
    const unsigned ord = d / e_;  // order of x -> x^q on this level
    k %= ord;
    FFElem r = a;
    const PMatrix& M = frob_q_[idx(a.level)];
    for (unsigned i = 0; i < k; ++i) r.coeffs = pmat_apply(M, r.coeffs, p_);
    return r;
}

FFElem TowerCtx::embed(const FFElem& a, Level up) const {
    if (a.level == up) return a;
    if (idx(a.level) > idx(up))
        throw DomainError("embed: target level is below the element's level");
    const PMatrix& E = emb_[idx(a.level)][idx(up)];
    return {up, pmat_apply(E, a.coeffs, p_)};
}

FFElem TowerCtx::project(const FFElem& a, Level down) const {
    if (a.level == down) return a;
    if (idx(a.level) < idx(down))
        throw DomainError("project: target level is above the element's level");
    const PMatrix& E = emb_[idx(down)][idx(a.level)];
    auto x = pmat_solve(E, a.coeffs, p_);
    if (!x) throw DomainError("project: element does not lie in the subfield");
    return {down, std::move(*x)};
}

FFElem TowerCtx::trace(const FFElem& a, Level to) const {
    if (idx(to) > idx(a.level))
        throw DomainError("trace: target level is above the element's level");
    if (to == a.level) return a;
    const unsigned r = degree(a.level) / degree(to);
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(p_), degree(to));
    const Field& F = field(a.level);
    Field::Elem acc = a.coeffs;
    Field::Elem cur = a.coeffs;
    for (unsigned k = 1; k < r; ++k) {
        cur = F.pow(cur, t);
        acc = F.add(acc, cur);
    }
    return project({a.level, std::move(acc)}, to);
}

std::optional<FFElem> TowerCtx::primitive(Level l) const { return primitive_[idx(l)]; }

std::optional<u64> TowerCtx::dlog(const FFElem& a) const {
    const auto& table = dlog_[idx(a.level)];
    if (table.empty() || is_zero(a)) return std::nullopt;
    auto it = table.find(encode_elem(a.coeffs, p_));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

FFElem TowerCtx::primitive_power(Level l, u64 k) const {
    const auto& prim = primitive_[idx(l)];
    if (!prim) throw DomainError("no primitive element registered at this level");
    return pow_u(*prim, k);
}

}  // namespace linperm
