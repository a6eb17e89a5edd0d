#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "freelab/monomial.hpp"
#include "freelab/polynomial.hpp"

namespace freelab {

/// Term of an element of a free module S^r: coeff * mon * e_comp.
template <class F>
struct ModTerm {
    Monomial mon;
    int comp = 0;
    typename F::Elem coeff;
};

/// Term-over-position order: compare monomials in grevlex first, break ties
/// by preferring the earlier position.
inline bool modterm_less(const Monomial& am, int ac, const Monomial& bm, int bc) {
    if (!(am == bm)) return grevlex_less(am, bm);
    return ac > bc;
}

/// Element of a graded free module S^r with terms in strictly decreasing
/// term-over-position order.
template <class F>
class ModElem {
  public:
    using Term = ModTerm<F>;

    ModElem() = default;

    static ModElem from_terms(const F& field, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return modterm_less(b.mon, b.comp, a.mon, a.comp);  // descending
        });
        ModElem e;
        for (auto& t : terms) {
            if (field.is_zero(t.coeff)) continue;
            if (!e.terms_.empty() && e.terms_.back().mon == t.mon && e.terms_.back().comp == t.comp)
                throw InvalidArgument("duplicate module term");
            e.terms_.push_back(std::move(t));
        }
        return e;
    }

    static ModElem from_poly(const HomPoly<F>& p, int comp = 0) {
        ModElem e;
        e.terms_.reserve(p.terms().size());
        for (const auto& t : p.terms()) e.terms_.push_back({t.mon, comp, t.coeff});
        return e;
    }

    /// Component as a plain polynomial.
    HomPoly<F> component(const F& field, int comp) const {
        std::vector<typename HomPoly<F>::Term> ts;
        for (const auto& t : terms_)
            if (t.comp == comp) ts.push_back({t.mon, t.coeff});
        return HomPoly<F>::from_terms(field, std::move(ts));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const {
        if (terms_.empty()) throw InvalidArgument("lead of zero module element");
        return terms_.front();
    }

    /// Raw degree of the leading monomial plus the component shift.
    int degree(const std::vector<int>& shifts) const {
        const Term& t = lead();
        return t.mon.degree() + (t.comp < static_cast<int>(shifts.size()) ? shifts[t.comp] : 0);
    }

    ModElem scaled(const F& field, const typename F::Elem& c) const {
        ModElem r;
        if (field.is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, c);
        return r;
    }

    ModElem term_multiplied(const F& field, const Monomial& m, const typename F::Elem& c) const {
        ModElem r;
        if (field.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon * m, t.comp, field.mul(t.coeff, c)});
        return r;
    }

    ModElem add(const F& field, const ModElem& o) const {
        ModElem r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            bool take_left;
            if (i == terms_.size())
                take_left = false;
            else if (j == o.terms_.size())
                take_left = true;
            else if (terms_[i].mon == o.terms_[j].mon && terms_[i].comp == o.terms_[j].comp) {
                auto c = field.add(terms_[i].coeff, o.terms_[j].coeff);
                if (!field.is_zero(c)) r.terms_.push_back({terms_[i].mon, terms_[i].comp, c});
                ++i;
                ++j;
                continue;
            } else
                take_left = modterm_less(o.terms_[j].mon, o.terms_[j].comp, terms_[i].mon, terms_[i].comp);
            if (take_left)
                r.terms_.push_back(terms_[i++]);
            else
                r.terms_.push_back(o.terms_[j++]);
        }
        return r;
    }

    ModElem sub(const F& field, const ModElem& o) const { return add(field, o.scaled(field, field.neg(field.one()))); }

    bool equals(const F& field, const ModElem& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mon == o.terms_[i].mon) || terms_[i].comp != o.terms_[i].comp ||
                !field.eq(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }

  private:
    std::vector<Term> terms_;
};

namespace detail {

template <class F>
void content_normalize(const F&, ModElem<F>&) {}  // prime field elements need no content step

inline void content_normalize(const QQ&, ModElem<QQ>& e) {
    if (e.is_zero()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : e.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    if (num_gcd == 0) return;
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (e.lead().coeff * scale < 0) scale = -scale;
    auto scaled = e.scaled(QQ{}, scale);
    e = scaled;
}

}  // namespace detail

/// Shared grading and field data for one Groebner computation.
template <class F>
struct GBContext {
    F field;
    int ncomp = 1;
    std::vector<int> shifts;  // degree shift per component; empty means all 0

    int shift_of(int comp) const { return comp < static_cast<int>(shifts.size()) ? shifts[comp] : 0; }
};

/// Groebner basis of an ideal (ncomp == 1) or of a graded submodule of S^r.
template <class F>
struct GroebnerBasis {
    GBContext<F> ctx;
    std::vector<ModElem<F>> gens;
    bool is_groebner = false;
    bool reduced = false;
};

namespace detail {

template <class F>
std::optional<std::size_t> find_reducer(const std::vector<ModElem<F>>& basis, const ModTerm<F>& t) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        const auto& lt = basis[i].lead();
        if (lt.comp == t.comp && lt.mon.divides(t.mon)) return i;
    }
    return std::nullopt;
}

/// Full normal form: cancels every reducible term, top to bottom.
template <class F>
ModElem<F> reduce_full(const GBContext<F>& ctx, ModElem<F> work, const std::vector<ModElem<F>>& basis) {
    const F& K = ctx.field;
    std::vector<ModTerm<F>> remainder;
    while (!work.is_zero()) {
        const auto t = work.lead();
        auto red = find_reducer(basis, t);
        if (!red) {
            remainder.push_back(t);
            auto single = ModElem<F>::from_terms(K, {t});
            work = work.sub(K, single);
            continue;
        }
        const auto& g = basis[*red];
        auto mult = K.div(t.coeff, g.lead().coeff);
        auto quot = Monomial::quotient(t.mon, g.lead().mon);
        work = work.sub(K, g.term_multiplied(K, quot, mult));
    }
    return ModElem<F>::from_terms(K, std::move(remainder));
}

/// Top reduction only; used inside Buchberger where tails need not be clean.
template <class F>
ModElem<F> reduce_top(const GBContext<F>& ctx, ModElem<F> work, const std::vector<ModElem<F>>& basis) {
    const F& K = ctx.field;
    while (!work.is_zero()) {
        auto red = find_reducer(basis, work.lead());
        if (!red) return work;
        const auto& g = basis[*red];
        const auto& t = work.lead();
        auto mult = K.div(t.coeff, g.lead().coeff);
        auto quot = Monomial::quotient(t.mon, g.lead().mon);
        work = work.sub(K, g.term_multiplied(K, quot, mult));
    }
    return work;
}

template <class F>
ModElem<F> s_poly(const GBContext<F>& ctx, const ModElem<F>& a, const ModElem<F>& b) {
    const F& K = ctx.field;
    const auto& la = a.lead();
    const auto& lb = b.lead();
    Monomial l = Monomial::lcm(la.mon, lb.mon);
    auto left = a.term_multiplied(K, Monomial::quotient(l, la.mon), K.inv(la.coeff));
    auto right = b.term_multiplied(K, Monomial::quotient(l, lb.mon), K.inv(lb.coeff));
    return left.sub(K, right);
}

}  // namespace detail

/// Buchberger completion with normal pair selection (lowest lcm degree first,
/// ties by generator indices) and the product (ideal case only) and chain
/// criteria. Returns the unique reduced basis.
template <class F>
GroebnerBasis<F> buchberger(const GBContext<F>& ctx, const std::vector<ModElem<F>>& input) {
    const F& K = ctx.field;
    std::vector<ModElem<F>> basis;
    for (const auto& g : input) {
        if (g.is_zero()) continue;
        ModElem<F> e = g;
        detail::content_normalize(K, e);
        basis.push_back(std::move(e));
    }

    auto pair_key = [&](std::size_t i, std::size_t j) {
        const auto& li = basis[i].lead();
        const auto& lj = basis[j].lead();
        int deg = Monomial::lcm(li.mon, lj.mon).degree() + ctx.shift_of(li.comp);
        return std::tuple<int, std::size_t, std::size_t>(deg, i, j);
    };

    std::set<std::tuple<int, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (basis[i].lead().comp == basis[j].lead().comp) queue.insert(pair_key(i, j));
    };
    for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});
        const auto& li = basis[i].lead();
        const auto& lj = basis[j].lead();
        Monomial l = Monomial::lcm(li.mon, lj.mon);
        if (ctx.ncomp == 1 && l.degree() == li.mon.degree() + lj.mon.degree()) continue;  // coprime leads
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            const auto& lk = basis[k].lead();
            if (lk.comp != li.comp || !lk.mon.divides(l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) chained = true;
        }
        if (chained) continue;
        auto nf = detail::reduce_full(ctx, detail::s_poly(ctx, basis[i], basis[j]), basis);
        if (nf.is_zero()) continue;
        detail::content_normalize(K, nf);
        basis.push_back(std::move(nf));
        queue_pairs_with(basis.size() - 1);
    }

    // minimalize: keep only elements whose lead no other kept lead divides
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& la = basis[a].lead();
        const auto& lb = basis[b].lead();
        if (!(la.mon == lb.mon) || la.comp != lb.comp)
            return modterm_less(la.mon, la.comp, lb.mon, lb.comp);
        return a < b;
    });
    std::vector<ModElem<F>> kept;
    for (std::size_t idx : order) {
        const auto& lt = basis[idx].lead();
        bool redundant = false;
        for (const auto& g : kept)
            if (g.lead().comp == lt.comp && g.lead().mon.divides(lt.mon)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(basis[idx]);
    }

    // inter-reduce tails and make monic
    GroebnerBasis<F> out;
    out.ctx = ctx;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModElem<F>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        auto red = detail::reduce_full(ctx, kept[i], others);
        out.gens.push_back(red.scaled(K, K.inv(red.lead().coeff)));
    }
    std::sort(out.gens.begin(), out.gens.end(), [&](const ModElem<F>& a, const ModElem<F>& b) {
        return modterm_less(a.lead().mon, a.lead().comp, b.lead().mon, b.lead().comp);
    });
    out.is_groebner = true;
    out.reduced = true;
    return out;
}

/// Unique remainder modulo a Groebner basis.
template <class F>
ModElem<F> normal_form(const ModElem<F>& f, const GroebnerBasis<F>& basis) {
    if (!basis.is_groebner) throw InvalidArgument("normal form requires a certified Groebner basis");
    return detail::reduce_full(basis.ctx, f, basis.gens);
}

/// Exhaustive certificate: every S-polynomial reduces to zero.
template <class F>
bool verify_groebner(const GroebnerBasis<F>& basis) {
    for (std::size_t i = 0; i < basis.gens.size(); ++i)
        for (std::size_t j = i + 1; j < basis.gens.size(); ++j) {
            if (basis.gens[i].lead().comp != basis.gens[j].lead().comp) continue;
            auto s = detail::s_poly(basis.ctx, basis.gens[i], basis.gens[j]);
            if (!detail::reduce_full(basis.ctx, s, basis.gens).is_zero()) return false;
        }
    return true;
}

// Convenience wrappers for ideals of S.

template <class F>
GroebnerBasis<F> ideal_groebner(const F& field, const std::vector<HomPoly<F>>& gens) {
    GBContext<F> ctx{field, 1, {}};
    std::vector<ModElem<F>> input;
    for (const auto& g : gens)
        if (!g.is_zero()) input.push_back(ModElem<F>::from_poly(g));
    return buchberger(ctx, input);
}

template <class F>
HomPoly<F> normal_form(const HomPoly<F>& f, const GroebnerBasis<F>& basis) {
    if (basis.ctx.ncomp != 1) throw InvalidArgument("polynomial normal form against a module basis");
    auto nf = normal_form(ModElem<F>::from_poly(f), basis);
    return nf.component(basis.ctx.field, 0);
}

/// dim (S/ideal)_m: the number of degree-m monomials not divisible by any
/// leading monomial of the basis.
template <class F>
int hilbert_function(const GroebnerBasis<F>& basis, int m) {
    if (!basis.is_groebner) throw InvalidArgument("hilbert function requires a certified Groebner basis");
    if (basis.ctx.ncomp != 1) throw InvalidArgument("hilbert function is implemented for ideals only");
    if (m < 0) return 0;
    std::vector<Monomial> leads;
    leads.reserve(basis.gens.size());
    for (const auto& g : basis.gens) leads.push_back(g.lead().mon);
    int count = 0;
    for (const auto& mon : monomials_of_degree(m)) {
        bool standard = true;
        for (const auto& l : leads)
            if (l.divides(mon)) {
                standard = false;
                break;
            }
        if (standard) ++count;
    }
    return count;
}

/// Append-only Buchberger run over the given generators that tracks, for every
/// basis element, a cofactor row expressing it in terms of the input. Every
/// S-polynomial that reduces to zero contributes its cofactor row as a syzygy
/// of the input; with no pair discarded and no input discarded, the harvested
/// rows generate the whole syzygy module.
template <class F>
std::vector<ModElem<F>> syzygy_harvest(const GBContext<F>& ctx, const std::vector<ModElem<F>>& input) {
    const F& K = ctx.field;
    struct Tracked {
        ModElem<F> val;
        ModElem<F> cof;
    };
    std::vector<Tracked> basis;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i].is_zero()) throw InvalidArgument("syzygy harvest with a zero generator");
        ModElem<F> unit = ModElem<F>::from_terms(K, {{Monomial{}, static_cast<int>(i), K.one()}});
        basis.push_back({input[i], std::move(unit)});
    }

    auto pair_key = [&](std::size_t i, std::size_t j) {
        int deg = Monomial::lcm(basis[i].val.lead().mon, basis[j].val.lead().mon).degree() +
                  ctx.shift_of(basis[i].val.lead().comp);
        return std::tuple<int, std::size_t, std::size_t>(deg, i, j);
    };
    std::set<std::tuple<int, std::size_t, std::size_t>> queue;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (basis[i].val.lead().comp == basis[j].val.lead().comp) queue.insert(pair_key(i, j));
    };
    for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(j);

    std::vector<ModElem<F>> harvested;
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        const auto& gi = basis[i];
        const auto& gj = basis[j];
        Monomial l = Monomial::lcm(gi.val.lead().mon, gj.val.lead().mon);
        auto ci = K.inv(gi.val.lead().coeff);
        auto cj = K.inv(gj.val.lead().coeff);
        ModElem<F> val = gi.val.term_multiplied(K, Monomial::quotient(l, gi.val.lead().mon), ci)
                             .sub(K, gj.val.term_multiplied(K, Monomial::quotient(l, gj.val.lead().mon), cj));
        ModElem<F> cof = gi.cof.term_multiplied(K, Monomial::quotient(l, gi.val.lead().mon), ci)
                             .sub(K, gj.cof.term_multiplied(K, Monomial::quotient(l, gj.val.lead().mon), cj));
        // top-reduce val, applying the same operations to cof
        for (;;) {
            if (val.is_zero()) {
                if (!cof.is_zero()) {
                    detail::content_normalize(K, cof);
                    harvested.push_back(std::move(cof));
                }
                break;
            }
            std::optional<std::size_t> red;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const auto& lt = basis[k].val.lead();
                if (lt.comp == val.lead().comp && lt.mon.divides(val.lead().mon)) {
                    red = k;
                    break;
                }
            }
            if (!red) {
                basis.push_back({std::move(val), std::move(cof)});
                queue_pairs_with(basis.size() - 1);
                break;
            }
            const auto& g = basis[*red];
            auto mult = K.div(val.lead().coeff, g.val.lead().coeff);
            auto quot = Monomial::quotient(val.lead().mon, g.val.lead().mon);
            val = val.sub(K, g.val.term_multiplied(K, quot, mult));
            cof = cof.sub(K, g.cof.term_multiplied(K, quot, mult));
        }
    }
    return harvested;
}

}  // namespace freelab
