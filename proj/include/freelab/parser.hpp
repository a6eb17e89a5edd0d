#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "freelab/polynomial.hpp"

namespace freelab {

namespace detail {

/// Possibly inhomogeneous accumulator used only while expanding parsed input.
template <class F>
struct TermMap {
    const F* field;
    std::map<Monomial, typename F::Elem, decltype(&grevlex_less)> terms{&grevlex_less};

    explicit TermMap(const F& f) : field(&f) {}

    void add_term(const Monomial& m, const typename F::Elem& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!field->is_zero(c)) terms.emplace(m, c);
        } else {
            it->second = field->add(it->second, c);
            if (field->is_zero(it->second)) terms.erase(it);
        }
    }

    TermMap operator+(const TermMap& o) const {
        TermMap r(*this);
        for (const auto& [m, c] : o.terms) r.add_term(m, c);
        return r;
    }
    TermMap operator-(const TermMap& o) const {
        TermMap r(*this);
        for (const auto& [m, c] : o.terms) r.add_term(m, field->neg(c));
        return r;
    }
    TermMap operator*(const TermMap& o) const {
        TermMap r(*field);
        for (const auto& [m1, c1] : terms)
            for (const auto& [m2, c2] : o.terms) r.add_term(m1 * m2, field->mul(c1, c2));
        return r;
    }
    TermMap pow(int e) const {
        TermMap r(*field);
        r.add_term(Monomial{}, field->one());
        TermMap base(*this);
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }
};

template <class F>
class PolyParser {
  public:
    PolyParser(const std::string& text, const F& field) : text_(text), field_(field) {}

    TermMap<F> run() {
        auto r = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

  private:
    const std::string& text_;
    const F& field_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer literal");
        try {
            return std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer literal out of range");
        }
    }

    TermMap<F> parse_sum() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        TermMap<F> acc = parse_product();
        if (negate) acc = TermMap<F>(field_) - acc;
        for (;;) {
            if (eat('+'))
                acc = acc + parse_product();
            else if (eat('-'))
                acc = acc - parse_product();
            else
                return acc;
        }
    }

    TermMap<F> parse_product() {
        TermMap<F> acc = parse_power();
        while (eat('*')) acc = acc * parse_power();
        return acc;
    }

    TermMap<F> parse_power() {
        TermMap<F> base = parse_atom();
        if (eat('^')) {
            long long e = parse_integer();
            if (e < 0) fail("exponent must be non-negative");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    TermMap<F> parse_atom() {
        char c = peek();
        TermMap<F> r(field_);
        if (c == '(') {
            eat('(');
            r = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            Monomial m;
            (c == 'x' ? m.ex : c == 'y' ? m.ey : m.ez) = 1;
            r.add_term(m, field_.one());
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long num = parse_integer();
            if (eat('/')) {
                long long den = parse_integer();
                if (den == 0) fail("zero denominator");
                r.add_term(Monomial{}, field_.from_fraction(num, den));
            } else {
                r.add_term(Monomial{}, field_.from_int(num));
            }
            return r;
        }
        fail(c == '\0' ? std::string("unexpected end of input") : "unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

/// Parses an ASCII polynomial expression (integer literals, x/y/z, + - * ^,
/// parentheses, and num/den fraction literals) into canonical form.
/// Throws ParseError, NotHomogeneousError, or ZeroPolynomialError.
template <class F>
HomPoly<F> parse_poly(const std::string& text, const F& field) {
    detail::PolyParser<F> parser(text, field);
    auto map = parser.run();
    std::vector<typename HomPoly<F>::Term> terms;
    terms.reserve(map.terms.size());
    for (const auto& [m, c] : map.terms) terms.push_back({m, c});
    auto p = HomPoly<F>::from_terms(field, std::move(terms));
    if (p.is_zero()) throw ZeroPolynomialError("expression expands to the zero polynomial");
    return p;
}

}  // namespace freelab
