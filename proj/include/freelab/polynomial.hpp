#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freelab/errors.hpp"
#include "freelab/fields.hpp"
#include "freelab/monomial.hpp"

namespace freelab {

/// Homogeneous polynomial in x, y, z over the exact field F. Terms are kept
/// sorted in strictly decreasing grevlex order, with no zero coefficients.
/// The zero polynomial carries no degree (degree() == -1).
template <class F>
class HomPoly {
  public:
    struct Term {
        Monomial mon;
        typename F::Elem coeff;
    };

    HomPoly() = default;
    explicit HomPoly(F field) : field_(std::move(field)) {}

    /// Builds from an arbitrary term list; merges duplicates, drops zeros,
    /// checks homogeneity.
    static HomPoly from_terms(const F& field, std::vector<Term> terms) {
        std::map<Monomial, typename F::Elem, decltype(&grevlex_less)> acc(&grevlex_less);
        for (auto& t : terms) {
            auto it = acc.find(t.mon);
            if (it == acc.end())
                acc.emplace(t.mon, t.coeff);
            else
                it->second = field.add(it->second, t.coeff);
        }
        HomPoly p(field);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            if (field.is_zero(it->second)) continue;
            p.terms_.push_back({it->first, it->second});
        }
        if (!p.terms_.empty()) {
            p.degree_ = p.terms_.front().mon.degree();
            for (const auto& t : p.terms_)
                if (t.mon.degree() != p.degree_)
                    throw NotHomogeneousError("terms of degrees " + std::to_string(p.degree_) + " and " +
                                              std::to_string(t.mon.degree()) + " mixed in one polynomial");
        }
        return p;
    }

    static HomPoly monomial(const F& field, Monomial m, typename F::Elem c) {
        return from_terms(field, {{m, std::move(c)}});
    }
    static HomPoly constant(const F& field, typename F::Elem c) { return monomial(field, Monomial{}, std::move(c)); }
    static HomPoly variable(const F& field, Var v, int exponent = 1) {
        Monomial m;
        (v == Var::x ? m.ex : v == Var::y ? m.ey : m.ez) = exponent;
        return monomial(field, m, field.one());
    }

    const F& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (is_zero()) throw InvalidArgument("leading term of zero polynomial");
        return terms_.front();
    }

    bool operator==(const HomPoly& o) const {
        if (terms_.size() != o.terms_.size() || degree_ != o.degree_) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mon == o.terms_[i].mon) || !field_.eq(terms_[i].coeff, o.terms_[i].coeff)) return false;
        return true;
    }

    HomPoly operator-() const {
        HomPoly r(*this);
        for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
        return r;
    }

    HomPoly operator+(const HomPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (degree_ != o.degree_) throw NotHomogeneousError("sum of polynomials of different degrees");
        HomPoly r(field_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && grevlex_less(o.terms_[j].mon, terms_[i].mon))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || grevlex_less(terms_[i].mon, o.terms_[j].mon)) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                auto c = field_.add(terms_[i].coeff, o.terms_[j].coeff);
                if (!field_.is_zero(c)) r.terms_.push_back({terms_[i].mon, c});
                ++i;
                ++j;
            }
        }
        if (!r.terms_.empty()) r.degree_ = degree_;
        return r;
    }

    HomPoly operator-(const HomPoly& o) const { return *this + (-o); }

    HomPoly scaled(const typename F::Elem& c) const {
        if (field_.is_zero(c)) return HomPoly(field_);
        HomPoly r(*this);
        for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
        return r;
    }

    /// Multiplication by a single term c*m.
    HomPoly term_multiplied(const Monomial& m, const typename F::Elem& c) const {
        if (field_.is_zero(c) || is_zero()) return HomPoly(field_);
        HomPoly r(field_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon * m, field_.mul(t.coeff, c)});
        r.degree_ = degree_ + m.degree();
        return r;
    }

    HomPoly operator*(const HomPoly& o) const {
        if (is_zero() || o.is_zero()) return HomPoly(field_);
        std::vector<Term> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) prods.push_back({a.mon * b.mon, field_.mul(a.coeff, b.coeff)});
        return from_terms(field_, std::move(prods));
    }

    HomPoly pow(int e) const {
        if (e < 0) throw InvalidArgument("negative exponent");
        HomPoly r = constant(field_, field_.one());
        HomPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    /// Formal partial derivative; the degree drops by one (or the result is
    /// zero, e.g. when the characteristic kills every coefficient).
    HomPoly derive(Var v) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            int e = t.mon.exponent(v);
            if (e == 0) continue;
            Monomial m = t.mon;
            (v == Var::x ? m.ex : v == Var::y ? m.ey : m.ez) -= 1;
            out.push_back({m, field_.mul(t.coeff, field_.from_int(e))});
        }
        return from_terms(field_, std::move(out));
    }

    /// f(x^k, y^k, z^k); the term count never changes.
    HomPoly kummer_pullback(int k) const {
        if (k < 1) throw InvalidArgument("kummer pullback needs k >= 1");
        HomPoly r(field_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({{t.mon.ex * k, t.mon.ey * k, t.mon.ez * k}, t.coeff});
        if (!r.terms_.empty()) r.degree_ = degree_ * k;
        // scaling every exponent by k preserves the grevlex order
        return r;
    }

    /// Exact division by a monomial; every term must be divisible.
    HomPoly divided_by_monomial(const Monomial& m) const {
        HomPoly r(field_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!m.divides(t.mon)) throw DivisionNotExactError("term " + t.mon.str() + " not divisible by " + m.str());
            r.terms_.push_back({Monomial::quotient(t.mon, m), t.coeff});
        }
        if (!r.terms_.empty()) r.degree_ = degree_ - m.degree();
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            std::string c = field_.to_string(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c = c.substr(1);
            if (i == 0)
                s += negative ? "-" : "";
            else
                s += negative ? "-" : "+";
            bool unit_coeff = (c == "1");
            if (t.mon.degree() == 0) {
                s += c;
            } else if (unit_coeff) {
                s += t.mon.str();
            } else {
                s += c + "*" + t.mon.str();
            }
        }
        return s;
    }

  private:
    F field_;
    int degree_ = -1;
    std::vector<Term> terms_;
};

enum class Axis { Lx, Ly, Lz };

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::Lx: return "L_x";
        case Axis::Ly: return "L_y";
        default: return "L_z";
    }
}

/// The variable cut out by the axis, and the two that survive on it.
inline Var axis_variable(Axis a) { return a == Axis::Lx ? Var::x : (a == Axis::Ly ? Var::y : Var::z); }
inline std::pair<Var, Var> axis_coordinates(Axis a) {
    switch (a) {
        case Axis::Lx: return {Var::y, Var::z};
        case Axis::Ly: return {Var::x, Var::z};
        default: return {Var::x, Var::y};
    }
}

/// Binary form: the restriction of f to a coordinate axis, as dense
/// coefficients c[i] of u^(D-i) v^i where (u, v) are the surviving variables.
template <class F>
std::vector<typename F::Elem> restrict_to_axis(const HomPoly<F>& f, Axis axis) {
    if (f.is_zero()) throw InvalidArgument("restriction of the zero polynomial");
    Var killed = axis_variable(axis);
    Var v = axis_coordinates(axis).second;
    std::vector<typename F::Elem> coeffs(static_cast<std::size_t>(f.degree()) + 1, f.field().zero());
    bool any = false;
    for (const auto& t : f.terms()) {
        if (t.mon.exponent(killed) != 0) continue;
        coeffs[static_cast<std::size_t>(t.mon.exponent(v))] = t.coeff;
        any = true;
    }
    if (!any) throw AxisContainedError(std::string("polynomial vanishes identically on ") + axis_name(axis));
    return coeffs;
}

/// Intersection multiplicity of the curve f=0 with a coordinate axis at a
/// point [u0:v0] of that axis, by repeated exact division of the restricted
/// binary form by the linear form v0*u - u0*v.
template <class F>
int axis_intersection_multiplicity(const HomPoly<F>& f, Axis axis, const typename F::Elem& u0,
                                   const typename F::Elem& v0) {
    const F& K = f.field();
    if (K.is_zero(u0) && K.is_zero(v0)) throw InvalidArgument("invalid projective point on axis");
    auto b = restrict_to_axis(f, axis);
    int mult = 0;
    for (;;) {
        // b(u,v) = q(u,v) * (v0*u - u0*v) + r, exact iff b(u0, v0) = 0
        std::size_t deg = b.size() - 1;
        if (!K.is_zero(v0)) {
            // synthetic division in u (coefficients of u^(deg-i) v^i)
            std::vector<typename F::Elem> q(deg, K.zero());
            typename F::Elem carry = K.zero();
            for (std::size_t i = 0; i < deg; ++i) {
                auto cur = K.add(b[i], carry);
                q[i] = K.div(cur, v0);
                carry = K.mul(q[i], u0);  // -(-u0 * q_i)
            }
            auto rem = K.add(b[deg], carry);
            if (!K.is_zero(rem)) return mult;
            b = std::move(q);
        } else {
            // dividing by v0*u - u0*v = -u0*v: exact iff coefficient of u^deg vanishes
            if (!K.is_zero(b[0])) return mult;
            std::vector<typename F::Elem> q(deg, K.zero());
            auto scale = K.neg(K.inv(u0));
            for (std::size_t i = 0; i < deg; ++i) q[i] = K.mul(b[i + 1], scale);
            b = std::move(q);
        }
        ++mult;
        if (b.empty()) return mult;  // form fully consumed
        if (b.size() == 1) {
            // constant: divisible again only if zero, which cannot happen for
            // a nonzero restriction
            return mult;
        }
    }
}

}  // namespace freelab
