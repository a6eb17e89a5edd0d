#pragma once

#include <array>
#include <string>
#include <vector>

#include "freelab/groebner.hpp"

namespace freelab {

/// Graded element (a, b, c) of S^3 with a*f_x + b*f_y + c*f_z = 0 for the
/// ambient curve; all nonzero components share one degree.
template <class F>
struct SyzygyVector {
    HomPoly<F> a, b, c;
    int degree = -1;

    static SyzygyVector make(const F& field, HomPoly<F> a, HomPoly<F> b, HomPoly<F> c) {
        SyzygyVector v{std::move(a), std::move(b), std::move(c)};
        for (const HomPoly<F>* p : {&v.a, &v.b, &v.c}) {
            if (p->is_zero()) continue;
            if (v.degree < 0)
                v.degree = p->degree();
            else if (v.degree != p->degree())
                throw InvalidArgument("syzygy components of unequal degrees");
        }
        if (v.degree < 0) throw InvalidArgument("zero syzygy vector");
        (void)field;
        return v;
    }

    const HomPoly<F>& component(int i) const { return i == 0 ? a : (i == 1 ? b : c); }

    ModElem<F> as_module_element(const F& field) const {
        std::vector<ModTerm<F>> terms;
        for (int i = 0; i < 3; ++i)
            for (const auto& t : component(i).terms()) terms.push_back({t.mon, i, t.coeff});
        return ModElem<F>::from_terms(field, std::move(terms));
    }

    /// a*g0 + b*g1 + c*g2 as a polynomial.
    HomPoly<F> dot(const std::array<HomPoly<F>, 3>& g) const { return a * g[0] + b * g[1] + c * g[2]; }
};

template <class F>
std::array<HomPoly<F>, 3> partial_derivatives(const HomPoly<F>& f) {
    return {f.derive(Var::x), f.derive(Var::y), f.derive(Var::z)};
}

/// Generators of the module ar(f) of relations among the partial derivatives,
/// harvested from the cofactor rows of reductions to zero. Every returned
/// vector is checked against the defining relation.
template <class F>
std::vector<SyzygyVector<F>> syzygy_generators(const HomPoly<F>& f) {
    const F& K = f.field();
    auto partials = partial_derivatives(f);
    std::vector<int> live;  // indices of nonzero partials
    for (int i = 0; i < 3; ++i)
        if (!partials[i].is_zero()) live.push_back(i);
    if (live.empty()) throw InvalidArgument("all partial derivatives vanish");

    std::vector<SyzygyVector<F>> out;
    // a vanishing partial contributes the degree-0 unit relation directly
    for (int i = 0; i < 3; ++i) {
        if (!partials[i].is_zero()) continue;
        HomPoly<F> zero(K), unit = HomPoly<F>::constant(K, K.one());
        out.push_back(SyzygyVector<F>::make(K, i == 0 ? unit : zero, i == 1 ? unit : zero, i == 2 ? unit : zero));
    }

    GBContext<F> ctx{K, 1, {}};
    std::vector<ModElem<F>> input;
    for (int i : live) input.push_back(ModElem<F>::from_poly(partials[i]));
    auto rows = syzygy_harvest(ctx, input);

    for (const auto& row : rows) {
        std::array<HomPoly<F>, 3> comp{HomPoly<F>(K), HomPoly<F>(K), HomPoly<F>(K)};
        for (std::size_t k = 0; k < live.size(); ++k) comp[live[k]] = row.component(K, static_cast<int>(k));
        auto v = SyzygyVector<F>::make(K, comp[0], comp[1], comp[2]);
        if (!v.dot(partials).is_zero())
            throw InvalidArgument("harvested row is not a relation among the partial derivatives");
        out.push_back(std::move(v));
    }
    return out;
}

/// Minimal homogeneous generating system: process candidates by increasing
/// degree (ties by input order) and drop anything the kept ones already span.
template <class F>
std::vector<SyzygyVector<F>> minimal_generators(const F& field, const std::vector<SyzygyVector<F>>& gens) {
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gens[a].degree < gens[b].degree; });

    GBContext<F> ctx{field, 3, {}};
    std::vector<SyzygyVector<F>> kept;
    std::vector<ModElem<F>> kept_mod;
    GroebnerBasis<F> gb;
    bool gb_valid = false;
    for (std::size_t idx : order) {
        const auto& cand = gens[idx];
        if (!kept.empty()) {
            if (!gb_valid) {
                gb = buchberger(ctx, kept_mod);
                gb_valid = true;
            }
            if (normal_form(cand.as_module_element(field), gb).is_zero()) continue;
        }
        kept.push_back(cand);
        kept_mod.push_back(cand.as_module_element(field));
        gb_valid = false;
    }
    return kept;
}

template <class F>
std::vector<int> minimal_generator_degrees(const F& field, const std::vector<SyzygyVector<F>>& gens) {
    std::vector<int> degs;
    for (const auto& v : minimal_generators(field, gens)) degs.push_back(v.degree);
    std::sort(degs.begin(), degs.end());
    return degs;
}

/// One generator of the second-syzygy module of a minimal generating triple,
/// normalized so its first nonzero component is monic, plus the multidegree
/// (deg v1, deg v2, deg v3).
template <class F>
struct SecondSyzygy {
    std::array<HomPoly<F>, 3> v;
    std::array<int, 3> multidegree;
};

template <class F>
SecondSyzygy<F> second_syzygy_relation(const F& field, const std::array<SyzygyVector<F>, 3>& rho) {
    GBContext<F> ctx{field, 3, {}};
    std::vector<ModElem<F>> input;
    for (const auto& r : rho) input.push_back(r.as_module_element(field));
    std::vector<int> shifts{rho[0].degree, rho[1].degree, rho[2].degree};
    auto rows = syzygy_harvest(ctx, input);
    if (rows.empty()) throw NoRelationError("the three generators admit no relation");

    // minimalize the relation rows; nearly free demands exactly one generator
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].degree(shifts) < rows[b].degree(shifts); });
    GBContext<F> relctx{field, 3, shifts};
    std::vector<ModElem<F>> kept;
    for (std::size_t idx : order) {
        if (!kept.empty()) {
            auto gb = buchberger(relctx, kept);
            if (normal_form(rows[idx], gb).is_zero()) continue;
        }
        kept.push_back(rows[idx]);
    }
    if (kept.empty()) throw NoRelationError("relation module is zero");
    if (kept.size() > 1)
        throw RankTooHighError("relation module needs " + std::to_string(kept.size()) + " generators, expected 1");

    SecondSyzygy<F> out;
    int total = kept[0].degree(shifts);
    for (int i = 0; i < 3; ++i) {
        out.v[i] = kept[0].component(field, i);
        out.multidegree[i] = total - shifts[i];
    }
    for (int i = 0; i < 3; ++i) {
        if (out.v[i].is_zero()) continue;
        auto inv = field.inv(out.v[i].leading_term().coeff);
        for (int j = 0; j < 3; ++j) out.v[j] = out.v[j].scaled(inv);
        break;
    }
    // the relation itself must vanish against the generators
    for (int c = 0; c < 3; ++c) {
        HomPoly<F> acc(field);
        for (int i = 0; i < 3; ++i) {
            auto t = out.v[i] * rho[i].component(c);
            acc = acc.is_zero() ? t : (t.is_zero() ? acc : acc + t);
        }
        if (!acc.is_zero()) throw InvalidArgument("computed second syzygy fails its defining identity");
    }
    return out;
}

/// Span equality of two generating sets of submodules of S^3.
template <class F>
bool same_module_span(const F& field, const std::vector<SyzygyVector<F>>& A, const std::vector<SyzygyVector<F>>& B) {
    GBContext<F> ctx{field, 3, {}};
    std::vector<ModElem<F>> ma, mb;
    for (const auto& v : A) ma.push_back(v.as_module_element(field));
    for (const auto& v : B) mb.push_back(v.as_module_element(field));
    auto gba = buchberger(ctx, ma);
    auto gbb = buchberger(ctx, mb);
    for (const auto& e : ma)
        if (!normal_form(e, gbb).is_zero()) return false;
    for (const auto& e : mb)
        if (!normal_form(e, gba).is_zero()) return false;
    return true;
}

}  // namespace freelab
