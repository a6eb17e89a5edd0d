#pragma once

#include <array>
#include <map>
#include <vector>

#include "freelab/linalg.hpp"
#include "freelab/polynomial.hpp"
#include "freelab/syzygy.hpp"

namespace freelab {

/// Graded dimensions, keyed by degree; absent keys mean zero.
using GradedDims = std::map<int, int>;

namespace oracle {

/// dim (ideal generated by gens)_m as the rank of the matrix whose rows are
/// the monomial multiples of the generators landing in degree m.
template <class F>
int graded_dim_linear(const F& field, const std::vector<HomPoly<F>>& gens, int m) {
    if (m < 0) return 0;
    const auto target = monomials_of_degree(m);
    std::vector<std::pair<const HomPoly<F>*, Monomial>> products;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() > m) continue;
        for (const auto& w : monomials_of_degree(m - g.degree())) products.emplace_back(&g, w);
    }
    if (products.empty()) return 0;
    DenseMatrix<F> M(field, products.size(), target.size());
    for (std::size_t r = 0; r < products.size(); ++r)
        for (const auto& t : products[r].first->terms())
            M.at(r, static_cast<std::size_t>(monomial_index(t.mon * products[r].second))) = t.coeff;
    return static_cast<int>(rank_destructive(M));
}

template <class F>
int quotient_dim_linear(const F& field, const std::vector<HomPoly<F>>& gens, int m) {
    return monomial_space_dim(m) - graded_dim_linear(field, gens, m);
}

/// Smallest m >= 0 such that the map S_m^3 -> S_{m+d-1},
/// (a,b,c) -> a f_x + b f_y + c f_z has nontrivial kernel. The Koszul
/// relations force termination by m = d-1.
template <class F>
int mdr_linear(const HomPoly<F>& f) {
    const F& K = f.field();
    auto partials = partial_derivatives(f);
    if (partials[0].is_zero() && partials[1].is_zero() && partials[2].is_zero())
        throw InvalidArgument("all partial derivatives vanish");
    int d = f.degree();
    for (int m = 0; m <= d - 1; ++m) {
        const auto domain = monomials_of_degree(m);
        std::size_t dom_dim = 3 * domain.size();
        DenseMatrix<F> M(K, dom_dim, static_cast<std::size_t>(monomial_space_dim(m + d - 1)));
        std::size_t r = 0;
        for (int i = 0; i < 3; ++i)
            for (const auto& w : domain) {
                for (const auto& t : partials[i].terms())
                    M.at(r, static_cast<std::size_t>(monomial_index(t.mon * w))) = t.coeff;
                ++r;
            }
        if (rank_destructive(M) < dom_dim) return m;
    }
    throw InvalidArgument("no relation up to degree d-1; Koszul relations are missing");
}

/// Normal-form table for S_stab modulo (J_f)_stab, from one reduced row
/// echelon pass over the Macaulay rows. Quotient coordinates are indexed by
/// the standard (non-pivot) monomials.
template <class F>
struct SaturationTable {
    int stab = 0;
    int tau = 0;                                    // dim (S/J_f)_stab
    std::vector<int> quotient_index;                // per monomial of S_stab; -1 for pivots
    std::vector<std::vector<typename F::Elem>> nf;  // per monomial: its class, a tau-vector
};

template <class F>
SaturationTable<F> build_saturation_table(const HomPoly<F>& f, int stab) {
    const F& K = f.field();
    auto partials = partial_derivatives(f);
    const auto target = monomials_of_degree(stab);
    std::vector<std::pair<int, Monomial>> products;
    for (int i = 0; i < 3; ++i) {
        if (partials[i].is_zero()) continue;
        int gd = partials[i].degree();
        if (gd > stab) continue;
        for (const auto& w : monomials_of_degree(stab - gd)) products.emplace_back(i, w);
    }
    DenseMatrix<F> M(K, products.size(), target.size());
    for (std::size_t r = 0; r < products.size(); ++r)
        for (const auto& t : partials[products[r].first].terms())
            M.at(r, static_cast<std::size_t>(monomial_index(t.mon * products[r].second))) = t.coeff;
    auto pivots = rref_in_place(M);

    SaturationTable<F> T;
    T.stab = stab;
    T.tau = static_cast<int>(target.size() - pivots.size());
    T.quotient_index.assign(target.size(), -1);
    int qi = 0;
    std::vector<bool> is_pivot(target.size(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < target.size(); ++c)
        if (!is_pivot[c]) T.quotient_index[c] = qi++;
    T.nf.assign(target.size(), std::vector<typename F::Elem>(static_cast<std::size_t>(T.tau), K.zero()));
    for (std::size_t c = 0; c < target.size(); ++c)
        if (!is_pivot[c]) T.nf[c][static_cast<std::size_t>(T.quotient_index[c])] = K.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        auto& row = T.nf[pivots[r]];
        for (std::size_t c = 0; c < target.size(); ++c) {
            if (is_pivot[c] || K.is_zero(M.at(r, c))) continue;
            row[static_cast<std::size_t>(T.quotient_index[c])] = K.neg(M.at(r, c));
        }
    }
    return T;
}

/// dim (I_f)_m where I_f is the saturation of J_f, as the kernel dimension of
/// g -> (g*x^e, g*y^e, g*z^e mod J_f) at degree stab, e = stab - m. Multiplying
/// by the three pure powers spans the same colon once the Hilbert function has
/// stabilized at stab.
template <class F>
int saturation_dim(const F& field, const SaturationTable<F>& T, int m) {
    if (m > T.stab) throw DegreeTooHighError("degree " + std::to_string(m) + " above stabilization degree");
    if (m < 0) return 0;
    int e = T.stab - m;
    const auto domain = monomials_of_degree(m);
    if (T.tau == 0) return static_cast<int>(domain.size());  // J saturated to the unit ideal
    std::array<Monomial, 3> powers{Monomial{e, 0, 0}, Monomial{0, e, 0}, Monomial{0, 0, e}};
    DenseMatrix<F> M(field, static_cast<std::size_t>(3 * T.tau), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j)
        for (int b = 0; b < 3; ++b) {
            const auto& cls = T.nf[static_cast<std::size_t>(monomial_index(domain[j] * powers[b]))];
            for (int q = 0; q < T.tau; ++q) M.at(static_cast<std::size_t>(b * T.tau + q), j) = cls[static_cast<std::size_t>(q)];
        }
    auto rank = rank_destructive(M);
    return static_cast<int>(domain.size() - rank);
}

/// n(f)_m = dim (I_f)_m - dim (J_f)_m computed on a complement basis of
/// (J_f)_m: forward echelon of the degree-m Macaulay rows splits the
/// monomials into pivots and a quotient basis B_m, and the multiplication
/// maps into the stab-degree normal-form table act on B_m alone, so
/// n(f)_m = |B_m| - rank(g -> (g*x^e, g*y^e, g*z^e mod J_f) on B_m).
/// Same value as saturation_dim minus graded_dim_linear, at a fraction of
/// the elimination work for large degrees.
template <class F>
int saturation_defect(const F& field, const HomPoly<F>& f, const SaturationTable<F>& T, int m) {
    if (m > T.stab) throw DegreeTooHighError("degree " + std::to_string(m) + " above stabilization degree");
    if (m < 0) return 0;
    auto partials = partial_derivatives(f);
    const auto target = monomials_of_degree(m);
    std::vector<std::pair<int, Monomial>> products;
    for (int i = 0; i < 3; ++i) {
        if (partials[i].is_zero()) continue;
        int gd = partials[i].degree();
        if (gd > m) continue;
        for (const auto& w : monomials_of_degree(m - gd)) products.emplace_back(i, w);
    }
    std::vector<bool> is_pivot(target.size(), false);
    if (!products.empty()) {
        DenseMatrix<F> M(field, products.size(), target.size());
        for (std::size_t r = 0; r < products.size(); ++r)
            for (const auto& t : partials[products[r].first].terms())
                M.at(r, static_cast<std::size_t>(monomial_index(t.mon * products[r].second))) = t.coeff;
        for (auto c : row_echelon_pivots(M)) is_pivot[c] = true;
    }
    std::vector<std::size_t> quotient_basis;
    for (std::size_t c = 0; c < target.size(); ++c)
        if (!is_pivot[c]) quotient_basis.push_back(c);
    if (quotient_basis.empty()) return 0;
    if (T.tau == 0) return static_cast<int>(quotient_basis.size());  // saturation is the unit ideal

    int e = T.stab - m;
    std::array<Monomial, 3> powers{Monomial{e, 0, 0}, Monomial{0, e, 0}, Monomial{0, 0, e}};
    DenseMatrix<F> Phi(field, quotient_basis.size(), static_cast<std::size_t>(3 * T.tau));
    for (std::size_t r = 0; r < quotient_basis.size(); ++r)
        for (int b = 0; b < 3; ++b) {
            const auto& cls = T.nf[static_cast<std::size_t>(monomial_index(target[quotient_basis[r]] * powers[b]))];
            for (int q = 0; q < T.tau; ++q)
                Phi.at(r, static_cast<std::size_t>(b * T.tau + q)) = cls[static_cast<std::size_t>(q)];
        }
    auto rank = rank_destructive(Phi);
    return static_cast<int>(quotient_basis.size() - rank);
}

/// Stabilized Hilbert value of S/J_f read at 3d-3 and confirmed at the two
/// degrees above; growth there means the input curve cannot be reduced.
template <class F>
int stabilized_quotient_dim(const F& field, const HomPoly<F>& f) {
    auto partials = partial_derivatives(f);
    std::vector<HomPoly<F>> gens(partials.begin(), partials.end());
    int stab = 3 * f.degree() - 3;
    int v0 = quotient_dim_linear(field, gens, stab);
    int v1 = quotient_dim_linear(field, gens, stab + 1);
    int v2 = quotient_dim_linear(field, gens, stab + 2);
    if (v0 != v1 || v1 != v2)
        throw NonReducedInputError("Hilbert function of the Milnor algebra does not stabilize: " + std::to_string(v0) +
                                   ", " + std::to_string(v1) + ", " + std::to_string(v2));
    return v0;
}

}  // namespace oracle

}  // namespace freelab
