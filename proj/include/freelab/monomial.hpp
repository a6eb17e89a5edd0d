#pragma once

#include <array>
#include <string>
#include <vector>

#include "freelab/errors.hpp"

namespace freelab {

enum class Var : int { x = 0, y = 1, z = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        default: return "z";
    }
}

/// Monomial x^ex * y^ey * z^ez.
struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    int degree() const { return ex + ey + ez; }
    int exponent(Var v) const { return v == Var::x ? ex : (v == Var::y ? ey : ez); }

    bool operator==(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const { return {ex + o.ex, ey + o.ey, ez + o.ez}; }

    bool divides(const Monomial& o) const { return ex <= o.ex && ey <= o.ey && ez <= o.ez; }

    /// Exact quotient o / this; caller guarantees divisibility.
    static Monomial quotient(const Monomial& num, const Monomial& den) {
        if (!den.divides(num)) throw InvalidArgument("monomial quotient is not exact");
        return {num.ex - den.ex, num.ey - den.ey, num.ez - den.ez};
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        return {a.ex > b.ex ? a.ex : b.ex, a.ey > b.ey ? a.ey : b.ey, a.ez > b.ez ? a.ez : b.ez};
    }

    std::string str() const {
        std::string s;
        auto app = [&](const char* v, int e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += v;
            if (e > 1) s += "^" + std::to_string(e);
        };
        app("x", ex);
        app("y", ey);
        app("z", ez);
        return s.empty() ? "1" : s;
    }
};

/// Graded reverse lexicographic order with x > y > z.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.ez != b.ez) return a.ez > b.ez;
    if (a.ey != b.ey) return a.ey > b.ey;
    return false;
}

inline int monomial_space_dim(int degree) {
    // dim S_m = binomial(m+2, 2)
    if (degree < 0) return 0;
    return (degree + 2) * (degree + 1) / 2;
}

/// All monomials of the given total degree, in decreasing grevlex order.
inline std::vector<Monomial> monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    out.reserve(monomial_space_dim(degree));
    for (int ez = 0; ez <= degree; ++ez)
        for (int ey = 0; ey + ez <= degree; ++ey) out.push_back({degree - ey - ez, ey, ez});
    return out;
}

/// Position of mon within monomials_of_degree(mon.degree()).
inline int monomial_index(const Monomial& mon) {
    int m = mon.degree();
    return mon.ez * (m + 1) - mon.ez * (mon.ez - 1) / 2 + mon.ey;
}

}  // namespace freelab
