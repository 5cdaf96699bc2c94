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

#include "linperm/gf.hpp"

#include <algorithm>
#include <cassert>

namespace linperm {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void pp_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pp_add(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_add(r[i], b[i], p);
    pp_trim(r);
    return r;
}

PPoly pp_sub(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_sub(r[i], b[i], p);
    pp_trim(r);
    return r;
}

PPoly pp_mul(const PPoly& a, const PPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(r);
    return r;
}

PPoly pp_mod(PPoly a, const PPoly& b, u64 p) {
    if (b.empty()) throw DomainError("pp_mod: division by zero polynomial");
    const u64 lead_inv = mod_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        const u64 c = mod_mul(a.back(), lead_inv, p);
        const size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = mod_sub(a[off + i], mod_mul(c, b[i], p), p);
        pp_trim(a);
    }
    return a;
}

PPoly pp_monic(PPoly f, u64 p) {
    if (f.empty()) return f;
    const u64 c = mod_inv(f.back(), p);
    for (auto& x : f) x = mod_mul(x, c, p);
    return f;
}

PPoly pp_gcd(PPoly a, PPoly b, u64 p) {
    pp_trim(a);
    pp_trim(b);
    while (!b.empty()) {
        a = pp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return pp_monic(std::move(a), p);
}

u64 pp_eval(const PPoly& f, u64 x, u64 p) {
    u64 r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = (r * x + *it) % p;
    return r;
}

static PPoly pp_pow_mod(PPoly base, u64 e, const PPoly& mod, u64 p) {
    PPoly r{1};
    base = pp_mod(std::move(base), mod, p);
    while (e) {
        if (e & 1) r = pp_mod(pp_mul(r, base, p), mod, p);
        base = pp_mod(pp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

PPoly pp_frobenius_power(const PPoly& f, unsigned k, u64 p) {
    PPoly x{0, 1};
    PPoly cur = pp_mod(x, f, p);
    for (unsigned i = 0; i < k; ++i) cur = pp_pow_mod(std::move(cur), p, f, p);
    return cur;
}

bool pp_is_irreducible(const PPoly& f, u64 p) {
    const int d = pp_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const PPoly x = pp_mod(PPoly{0, 1}, f, p);
    // x^(p^d) == x mod f
    if (pp_frobenius_power(f, static_cast<unsigned>(d), p) != x) return false;
    for (const auto& [l, _] : factor_u64(static_cast<u64>(d))) {
        PPoly t = pp_frobenius_power(f, static_cast<unsigned>(d / l), p);
        t = pp_sub(t, x, p);
        if (pp_deg(pp_gcd(t, f, p)) != 0) return false;
    }
    return true;
}

PPoly find_irreducible(u64 p, unsigned degree, Rng& rng) {
    if (degree == 0) throw DomainError("find_irreducible: degree must be >= 1");
    if (degree == 1) return PPoly{0, 1};  // x
    constexpr int kMaxAttempts = 200000;
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        PPoly f(degree + 1, 0);
        f[degree] = 1;
        for (unsigned i = 0; i < degree; ++i) f[i] = coeff(rng);
        if (pp_is_irreducible(f, p)) return f;
    }
    throw SearchExhausted("find_irreducible: attempt bound exceeded for p=" +
                          std::to_string(p) + " degree=" + std::to_string(degree));
}

// ---------------------------------------------------------------------------

Field::Field(u64 p, PPoly modulus) : p_(p), mod_(std::move(modulus)) {
    pp_trim(mod_);
    if (!is_prime_u64(p_)) throw DomainError("Field: p must be prime");
    if (pp_deg(mod_) < 1) throw DomainError("Field: modulus must have degree >= 1");
    if (mod_.back() != 1) mod_ = pp_monic(std::move(mod_), p_);
    for (auto& c : mod_) c %= p_;
    deg_ = static_cast<unsigned>(pp_deg(mod_));
}

mpz_class Field::size() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), deg_);
    return r;
}

Field::Elem Field::one() const {
    Elem e(deg_, 0);
    e[0] = 1 % p_;
    return e;
}

Field::Elem Field::gen() const {
    Elem e(deg_, 0);
    if (deg_ == 1) {
        e[0] = mod_sub(0, mod_[0], p_);  // class of x is -mod[0]
    } else {
        e[1] = 1;
    }
    return e;
}

Field::Elem Field::from_int(u64 c) const {
    Elem e(deg_, 0);
    e[0] = c % p_;
    return e;
}

Field::Elem Field::make(std::vector<u64> coeffs) const {
    if (coeffs.size() > deg_) {
        PPoly f(coeffs);
        f = pp_mod(std::move(f), mod_, p_);
        coeffs = f;
    }
    coeffs.resize(deg_, 0);
    for (auto& c : coeffs) c %= p_;
    return coeffs;
}

bool Field::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

Field::Elem Field::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = mod_add(a[i], b[i], p_);
    return r;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = mod_sub(a[i], b[i], p_);
    return r;
}

Field::Elem Field::neg(const Elem& a) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = mod_sub(0, a[i], p_);
    return r;
}

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
    std::vector<u64> conv(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j)
            conv[i + j] = (conv[i + j] + a[i] * b[j]) % p_;
    }
    // reduce by the monic modulus
    for (size_t i = conv.size(); i-- > deg_;) {
        const u64 c = conv[i];
        if (c == 0) continue;
        conv[i] = 0;
        for (unsigned j = 0; j < deg_; ++j)
            conv[i - deg_ + j] = mod_sub(conv[i - deg_ + j], mod_mul(c, mod_[j], p_), p_);
    }
    conv.resize(deg_);
    return conv;
}

Field::Elem Field::scal(u64 c, const Elem& a) const {
    Elem r(deg_);
    c %= p_;
    for (unsigned i = 0; i < deg_; ++i) r[i] = mod_mul(c, a[i], p_);
    return r;
}

Field::Elem Field::inv(const Elem& a) const {
    if (is_zero(a)) throw DomainError("Field::inv: zero has no inverse");
    // extended Euclid on (a, modulus) over F_p[x]
    PPoly r0 = mod_, r1(a);
    pp_trim(r1);
    PPoly s0{}, s1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        PPoly q;
        PPoly rem = r0;
        const u64 lead_inv = mod_inv(r1.back(), p_);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            const u64 c = mod_mul(rem.back(), lead_inv, p_);
            const size_t off = rem.size() - r1.size();
            q[off] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[off + i] = mod_sub(rem[off + i], mod_mul(c, r1[i], p_), p_);
            pp_trim(rem);
        }
        pp_trim(q);
        PPoly s2 = pp_sub(s0, pp_mul(q, s1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (pp_deg(r0) != 0)
        throw DomainError("Field::inv: element not invertible (modulus not irreducible?)");
    const u64 c = mod_inv(r0[0], p_);
    PPoly res(s0);
    for (auto& x : res) x = mod_mul(x, c, p_);
    res.resize(deg_, 0);
    return res;
}

Field::Elem Field::pow(Elem a, u64 e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Field::Elem Field::pow(Elem a, const mpz_class& e) const {
    if (e < 0) throw DomainError("Field::pow: negative exponent");
    Elem r = one();
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

Field::Elem Field::random(Rng& rng) const {
    std::uniform_int_distribution<u64> coeff(0, p_ - 1);
    Elem e(deg_);
    for (auto& c : e) c = coeff(rng);
    return e;
}

mpz_class Field::mult_order(const Elem& a) const {
    if (is_zero(a)) throw DomainError("mult_order: zero element");
    const mpz_class full = size() - 1;
    if (!full.fits_ulong_p())
        throw DomainError("mult_order: field too large to factor the group order");
    u64 n = mpz_get_ui(full.get_mpz_t());
    u64 order = n;
    for (const auto& [q, e] : factor_u64(n)) {
        for (unsigned i = 0; i < e; ++i) {
            if (pow(a, order / q) == one())
                order /= q;
            else
                break;
        }
    }
    return mpz_class(static_cast<unsigned long>(order));
}

}  // namespace linperm
