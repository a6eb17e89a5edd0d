#pragma once

#include <cstddef>
#include <vector>

#include "freelab/fields.hpp"

namespace freelab {

/// Row-major dense matrix over an exact field.
template <class F>
struct DenseMatrix {
    F field;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<typename F::Elem> a;

    DenseMatrix(F f, std::size_t r, std::size_t c)
        : field(std::move(f)), rows(r), cols(c), a(r * c, field.zero()) {}

    typename F::Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const typename F::Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Rank by ordinary Gaussian elimination; destroys the matrix. Deterministic
/// pivoting: first nonzero entry in column order.
template <class F>
std::size_t rank_destructive(DenseMatrix<F>& M) {
    const F& K = M.field;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && K.is_zero(M.at(piv, col))) ++piv;
        if (piv == M.rows) continue;
        if (piv != lead)
            for (std::size_t c = col; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(lead, c));
        auto inv = K.inv(M.at(lead, col));
        for (std::size_t r = lead + 1; r < M.rows; ++r) {
            if (K.is_zero(M.at(r, col))) continue;
            auto mult = K.mul(M.at(r, col), inv);
            M.at(r, col) = K.zero();
            for (std::size_t c = col + 1; c < M.cols; ++c) {
                if (K.is_zero(M.at(lead, c))) continue;
                M.at(r, c) = K.sub(M.at(r, c), K.mul(mult, M.at(lead, c)));
            }
        }
        ++lead;
    }
    return lead;
}

/// Rank over Q by fraction-free elimination on integer rows (denominators
/// cleared up front, content removed after every combination step).
inline std::size_t rank_destructive(DenseMatrix<QQ>& M) {
    std::vector<std::vector<mpz_class>> rows(M.rows);
    for (std::size_t r = 0; r < M.rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < M.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(r, c).get_den_mpz_t());
        rows[r].resize(M.cols);
        for (std::size_t c = 0; c < M.cols; ++c) {
            mpq_class v = M.at(r, c) * mpq_class(l);
            rows[r][c] = v.get_num();  // denominator is 1 by construction
        }
    }
    auto remove_content = [](std::vector<mpz_class>& row) {
        mpz_class g = 0;
        for (const auto& v : row) {
            if (v == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    };
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && rows[piv][col] == 0) ++piv;
        if (piv == M.rows) continue;
        std::swap(rows[piv], rows[lead]);
        remove_content(rows[lead]);
        for (std::size_t r = lead + 1; r < M.rows; ++r) {
            if (rows[r][col] == 0) continue;
            const mpz_class p = rows[lead][col], q = rows[r][col];
            for (std::size_t c = col + 1; c < M.cols; ++c) rows[r][c] = p * rows[r][c] - q * rows[lead][c];
            rows[r][col] = 0;
            remove_content(rows[r]);
        }
        ++lead;
    }
    return lead;
}

template <class F>
std::size_t rank_of(DenseMatrix<F> M) {
    return rank_destructive(M);
}

/// Forward row echelon only; returns the pivot columns. Cheaper than the
/// reduced form when only the column split matters.
template <class F>
std::vector<std::size_t> row_echelon_pivots(DenseMatrix<F>& M) {
    const F& K = M.field;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && K.is_zero(M.at(piv, col))) ++piv;
        if (piv == M.rows) continue;
        if (piv != lead)
            for (std::size_t c = col; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(lead, c));
        auto inv = K.inv(M.at(lead, col));
        for (std::size_t r = lead + 1; r < M.rows; ++r) {
            if (K.is_zero(M.at(r, col))) continue;
            auto mult = K.mul(M.at(r, col), inv);
            M.at(r, col) = K.zero();
            for (std::size_t c = col + 1; c < M.cols; ++c) {
                if (K.is_zero(M.at(lead, c))) continue;
                M.at(r, c) = K.sub(M.at(r, c), K.mul(mult, M.at(lead, c)));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

/// In-place reduced row echelon form. Returns the pivot column of each of the
/// first rank rows.
template <class F>
std::vector<std::size_t> rref_in_place(DenseMatrix<F>& M) {
    const F& K = M.field;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && K.is_zero(M.at(piv, col))) ++piv;
        if (piv == M.rows) continue;
        if (piv != lead)
            for (std::size_t c = col; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(lead, c));
        auto inv = K.inv(M.at(lead, col));
        for (std::size_t c = col; c < M.cols; ++c)
            if (!K.is_zero(M.at(lead, c))) M.at(lead, c) = K.mul(M.at(lead, c), inv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == lead || K.is_zero(M.at(r, col))) continue;
            auto mult = M.at(r, col);
            for (std::size_t c = col; c < M.cols; ++c) {
                if (K.is_zero(M.at(lead, c))) continue;
                M.at(r, c) = K.sub(M.at(r, c), K.mul(mult, M.at(lead, c)));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

}  // namespace freelab
