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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace linperm {

using u64 = std::uint64_t;
using Rng = std::mt19937_64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Domain-level failure (singular matrix, non-unit, level mismatch, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Malformed external input (JSON schema violations, bad parameters).
struct ParseError : Error {
    using Error::Error;
};

/// A randomized search hit its attempt bound.
struct SearchExhausted : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime p.

inline u64 mod_add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 mod_sub(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
inline u64 mod_mul(u64 a, u64 b, u64 p) { return (a * b) % p; }

inline u64 mod_pow(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, b, p);
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

inline u64 mod_inv(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw DomainError("inverse of zero mod " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

bool is_prime_u64(u64 n);

/// Prime factorization by trial division; returns (prime, exponent) pairs.
std::vector<std::pair<u64, unsigned>> factor_u64(u64 n);

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, coefficients low-to-high, trimmed
// (the zero polynomial is the empty vector).

using PPoly = std::vector<u64>;

inline int pp_deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

void pp_trim(PPoly& f);
PPoly pp_add(const PPoly& a, const PPoly& b, u64 p);
PPoly pp_sub(const PPoly& a, const PPoly& b, u64 p);
PPoly pp_mul(const PPoly& a, const PPoly& b, u64 p);
/// Remainder of a modulo b (b nonzero).
PPoly pp_mod(PPoly a, const PPoly& b, u64 p);
/// Monic gcd.
PPoly pp_gcd(PPoly a, PPoly b, u64 p);
u64 pp_eval(const PPoly& f, u64 x, u64 p);
PPoly pp_monic(PPoly f, u64 p);

/// x^(p^k) mod f, via k successive p-th powers.
PPoly pp_frobenius_power(const PPoly& f, unsigned k, u64 p);

/// Rabin irreducibility test for a monic polynomial of degree >= 1 over F_p.
bool pp_is_irreducible(const PPoly& f, u64 p);

/// Seeded random search for a monic irreducible polynomial of the given degree.
PPoly find_irreducible(u64 p, unsigned degree, Rng& rng);

// ---------------------------------------------------------------------------
// A finite field F_p[x]/(modulus), the single arithmetic kernel every tower
// level shares.  Elements are fixed-length coefficient vectors over F_p.

class Field {
  public:
    using Elem = std::vector<u64>;

    Field() = default;
    Field(u64 p, PPoly modulus);

    u64 p() const { return p_; }
    unsigned degree() const { return deg_; }
    const PPoly& modulus() const { return mod_; }
    mpz_class size() const;

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    /// The residue class of x (for degree 1 this is the constant term of -mod).
    Elem gen() const;
    Elem from_int(u64 c) const;
    Elem make(std::vector<u64> coeffs) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scal(u64 c, const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, u64 e) const;
    Elem pow(Elem a, const mpz_class& e) const;
    Elem random(Rng& rng) const;

    /// Multiplicative order (field must be small enough to factor size-1).
    mpz_class mult_order(const Elem& a) const;

  private:
    u64 p_ = 0;
    PPoly mod_;
    unsigned deg_ = 0;
};

}  // namespace linperm
