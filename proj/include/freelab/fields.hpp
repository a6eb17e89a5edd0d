#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "freelab/errors.hpp"

namespace freelab {

/// The rational field with arbitrary-precision values. Elements are kept in
/// lowest terms with positive denominator (GMP canonical form).
struct QQ {
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_int(long long n) {
        Elem e;
        e = static_cast<long>(n);
        return e;
    }
    static Elem from_fraction(long long num, long long den) {
        if (den == 0) throw InvalidArgument("fraction with zero denominator");
        Elem e(static_cast<long>(num), static_cast<long>(den));
        e.canonicalize();
        return e;
    }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (a == 0) throw InvalidArgument("inverse of zero");
        return Elem(1) / a;
    }
    static Elem div(const Elem& a, const Elem& b) { return mul(a, inv(b)); }
    static bool is_zero(const Elem& a) { return a == 0; }
    static bool is_one(const Elem& a) { return a == 1; }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    static std::string to_string(const Elem& a) { return a.get_str(); }

    static constexpr const char* name() { return "q"; }
    bool operator==(const QQ&) const { return true; }
};

inline constexpr std::uint64_t kDefaultPrime = 32003;

/// Prime field F_p for a word-sized prime p. Values are canonical
/// representatives in [0, p).
struct GFp {
    using Elem = std::uint64_t;

    std::uint64_t p;
    std::uint64_t barrett;  // floor(2^64 / p), for division-free reduction

    GFp() : GFp(kDefaultPrime) {}
    explicit GFp(std::uint64_t prime) : p(prime) {
        if (prime < 2 || prime >= (std::uint64_t(1) << 32))
            throw InvalidArgument("prime must satisfy 2 <= p < 2^32");
        if (!is_prime(prime)) throw InvalidArgument("modulus " + std::to_string(prime) + " is not prime");
        barrett = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
    }

    /// x mod p for any 64-bit x; the Barrett quotient is off by at most one,
    /// fixed with a single conditional subtraction.
    Elem reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett) >> 64);
        std::uint64_t r = x - q * p;
        return r >= p ? r - p : r;
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
    Elem from_fraction(long long num, long long den) const { return div(from_int(num), from_int(den)); }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return reduce(a * b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw InvalidArgument("inverse of zero");
        // extended gcd on (a, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string to_string(Elem a) const { return std::to_string(a); }

    static constexpr const char* name() { return "fp"; }
    bool operator==(const GFp& o) const { return p == o.p; }
};

}  // namespace freelab
