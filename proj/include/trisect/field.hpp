/*
   Copyright 2026 The trisect authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TRISECT_FIELD_HPP
#define TRISECT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace trisect {

/// Is c a valid field characteristic (0 or a prime)?
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Exact rational coefficients (characteristic zero), backed by GMP.
struct RationalField {
    using Elem = mpq_class;

    static std::uint64_t characteristic() { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        Elem e(num, den);
        e.canonicalize();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw std::domain_error("division by zero");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    /// Total order used only for canonical sorting and printing.
    int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b); }

    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }
};

/// GF(p) for a prime p < 2^31; elements are canonical representatives.
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
        if (p >= (1ull << 31)) throw std::invalid_argument("prime too large (must be < 2^31)");
    }

    std::uint64_t characteristic() const { return p; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long m = v % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        return static_cast<Elem>(m);
    }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        Elem d = reduce(den);
        if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
        return mul(reduce(num), inv(d));
    }
    /// Image of an integer in GF(p).
    Elem reduce(const mpz_class& z) const {
        mpz_class m = z % static_cast<unsigned long>(p);
        if (m < 0) m += static_cast<unsigned long>(p);
        return m.get_ui();
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }  // p < 2^31, no overflow
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a % p == 0) throw std::domain_error("inverse of zero in GF(p)");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a % p == 0; }
    bool equal(Elem a, Elem b) const { return a % p == b % p; }
    int cmp(Elem a, Elem b) const { return a < b ? -1 : (a == b ? 0 : 1); }

    std::string str(Elem a) const { return std::to_string(a % p); }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace trisect

#endif
