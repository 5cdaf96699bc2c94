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

#include "linperm/fpoly.hpp"

#include <algorithm>
#include <cassert>

namespace linperm {

void fp_trim(const Field& F, FPoly& f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    fp_trim(F, r);
    return r;
}

FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    fp_trim(F, r);
    return r;
}

FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(F, r);
    return r;
}

std::pair<FPoly, FPoly> fp_divmod(const Field& F, FPoly a, const FPoly& b) {
    if (b.empty()) throw DomainError("fp_divmod: division by zero polynomial");
    fp_trim(F, a);
    const Field::Elem lead_inv = F.inv(b.back());
    FPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F.zero());
    while (a.size() >= b.size() && !a.empty()) {
        const Field::Elem c = F.mul(a.back(), lead_inv);
        const size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = F.sub(a[off + i], F.mul(c, b[i]));
        fp_trim(F, a);
    }
    fp_trim(F, q);
    return {std::move(q), std::move(a)};
}

FPoly fp_mod(const Field& F, FPoly a, const FPoly& b) {
    return fp_divmod(F, std::move(a), b).second;
}

FPoly fp_monic(const Field& F, FPoly f) {
    fp_trim(F, f);
    if (f.empty()) return f;
    const Field::Elem c = F.inv(f.back());
    for (auto& x : f) x = F.mul(x, c);
    return f;
}

FPoly fp_gcd(const Field& F, FPoly a, FPoly b) {
    fp_trim(F, a);
    fp_trim(F, b);
    while (!b.empty()) {
        a = fp_mod(F, std::move(a), b);
        std::swap(a, b);
    }
    return fp_monic(F, std::move(a));
}

FpExtGcd fp_ext_gcd(const Field& F, FPoly a, FPoly b) {
    fp_trim(F, a);
    fp_trim(F, b);
    FPoly r0 = std::move(a), r1 = std::move(b);
    FPoly s0{F.one()}, s1{};
    FPoly t0{}, t1{F.one()};
    while (!r1.empty()) {
        auto [q, r2] = fp_divmod(F, r0, r1);
        FPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
        FPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.empty()) {
        const Field::Elem c = F.inv(r0.back());
        for (auto& x : r0) x = F.mul(x, c);
        for (auto& x : s0) x = F.mul(x, c);
        for (auto& x : t0) x = F.mul(x, c);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

Field::Elem fp_eval(const Field& F, const FPoly& f, const Field::Elem& x) {
    Field::Elem r = F.zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

FPoly fp_pow_mod(const Field& F, FPoly base, const mpz_class& e, const FPoly& mod) {
    FPoly r{F.one()};
    base = fp_mod(F, std::move(base), mod);
    if (e == 0) return r;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = fp_mod(F, fp_mul(F, r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(F, fp_mul(F, r, base), mod);
    }
    return r;
}

// ---------------------------------------------------------------------------

unsigned mat_rank(const Field& F, FMatrix M) {
    if (M.empty()) return 0;
    const size_t rows = M.size(), cols = M[0].size();
    unsigned rank = 0;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t pivot = prow;
        while (pivot < rows && F.is_zero(M[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[prow], M[pivot]);
        const Field::Elem inv = F.inv(M[prow][col]);
        for (size_t j = col; j < cols; ++j) M[prow][j] = F.mul(M[prow][j], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || F.is_zero(M[r][col])) continue;
            const Field::Elem c = M[r][col];
            for (size_t j = col; j < cols; ++j)
                M[r][j] = F.sub(M[r][j], F.mul(c, M[prow][j]));
        }
        ++prow;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Field::Elem>> mat_solve(const Field& F, FMatrix M,
                                                  std::vector<Field::Elem> rhs) {
    const size_t n = M.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && F.is_zero(M[pivot][col])) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(M[col], M[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        const Field::Elem inv = F.inv(M[col][col]);
        for (size_t j = col; j < n; ++j) M[col][j] = F.mul(M[col][j], inv);
        rhs[col] = F.mul(rhs[col], inv);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || F.is_zero(M[r][col])) continue;
            const Field::Elem c = M[r][col];
            for (size_t j = col; j < n; ++j)
                M[r][j] = F.sub(M[r][j], F.mul(c, M[col][j]));
            rhs[r] = F.sub(rhs[r], F.mul(c, rhs[col]));
        }
    }
    return rhs;
}

// ---------------------------------------------------------------------------

namespace {

// Lift a polynomial over F_p to K[y].
FPoly lift_to(const Field& K, const PPoly& g) {
    FPoly r;
    r.reserve(g.size());
    for (u64 c : g) r.push_back(K.from_int(c));
    return r;
}

// Equal-degree splitting of a squarefree product of linear factors over K.
FPoly split_linear(const Field& K, FPoly f, Rng& rng) {
    fp_trim(K, f);
    while (fp_deg(f) > 1) {
        const Field::Elem a = K.random(rng);
        FPoly probe;
        if (K.p() == 2) {
            // trace map T(a*y) = sum_{i<deg} (a*y)^(2^i)
            FPoly ay{K.zero(), a};
            FPoly z = fp_mod(K, ay, f);
            FPoly acc = z;
            const unsigned bits = K.degree();
            for (unsigned i = 1; i < bits; ++i) {
                z = fp_mod(K, fp_mul(K, z, z), f);
                acc = fp_add(K, acc, z);
            }
            probe = std::move(acc);
        } else {
            const mpz_class half = (K.size() - 1) / 2;
            FPoly ya{a, K.one()};  // y + a
            FPoly t = fp_pow_mod(K, ya, half, f);
            probe = fp_sub(K, t, FPoly{K.one()});
        }
        FPoly g = fp_gcd(K, probe, f);
        const int dg = fp_deg(g);
        if (dg <= 0 || dg >= fp_deg(f)) continue;
        if (2 * dg <= fp_deg(f))
            f = std::move(g);
        else
            f = fp_divmod(K, f, g).first;
        f = fp_monic(K, std::move(f));
    }
    return f;
}

}  // namespace

Field::Elem root_of_irreducible(const PPoly& g, const Field& K, Rng& rng) {
    const int d = pp_deg(g);
    if (d < 1) throw DomainError("root_of_irreducible: constant polynomial");
    if (K.degree() % static_cast<unsigned>(d) != 0)
        throw DomainError("root_of_irreducible: degree does not divide [K:F_p]");
    FPoly f = fp_monic(K, lift_to(K, g));
    if (d == 1) return K.neg(f[0]);
    FPoly lin = split_linear(K, std::move(f), rng);
    // lin = y + c, root = -c
    return K.neg(lin[0]);
}

}  // namespace linperm
