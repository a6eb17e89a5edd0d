#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "freelab/polynomial.hpp"

namespace freelab {

/// Point of the projective plane classified against the coordinate triangle:
/// ptype counts the nonzero-coordinate freedom (0 = vertex, 2 = off the
/// triangle); axes lists the coordinate lines through the point.
template <class F>
struct AxisPoint {
    std::array<typename F::Elem, 3> coords;
    int ptype = 2;
    std::vector<Axis> axes;
};

template <class F>
AxisPoint<F> classify_point(const F& field, const std::array<typename F::Elem, 3>& coords) {
    AxisPoint<F> p;
    p.coords = coords;
    int zeros = 0;
    for (int i = 0; i < 3; ++i) {
        if (!field.is_zero(coords[static_cast<std::size_t>(i)])) continue;
        ++zeros;
        p.axes.push_back(i == 0 ? Axis::Lx : (i == 1 ? Axis::Ly : Axis::Lz));
    }
    if (zeros == 3) throw InvalidArgument("[0:0:0] is not a projective point");
    p.ptype = 2 - zeros;
    return p;
}

/// A point of the base curve on the coordinate triangle, with its local data.
/// The per-axis intersection multiplicities are always computed from the
/// defining polynomial, never copied from prose.
template <class F>
struct BaseSingularity {
    AxisPoint<F> location;
    int mu = 0;  // local Milnor number of the base curve (family metadata)
    bool locally_irreducible = true;
    std::vector<std::pair<Axis, int>> axis_mults;
    std::string label;  // e.g. "A4", "E8", "smooth"
};

template <class F>
BaseSingularity<F> make_base_singularity(const HomPoly<F>& base, const AxisPoint<F>& location, int mu,
                                         bool locally_irreducible, std::string label) {
    BaseSingularity<F> s;
    s.location = location;
    s.mu = mu;
    s.locally_irreducible = locally_irreducible;
    s.label = std::move(label);
    for (Axis ax : location.axes) {
        auto [u, v] = axis_coordinates(ax);
        auto u0 = location.coords[static_cast<std::size_t>(static_cast<int>(u))];
        auto v0 = location.coords[static_cast<std::size_t>(static_cast<int>(v))];
        s.axis_mults.emplace_back(ax, axis_intersection_multiplicity(base, ax, u0, v0));
    }
    return s;
}

/// Meridian exponents (m_x, m_y, m_z) of the point: the intersection
/// multiplicity with each axis through it, zero for the others.
template <class F>
std::array<int, 3> meridian_triple(const BaseSingularity<F>& s) {
    std::array<int, 3> m{0, 0, 0};
    for (const auto& [ax, mult] : s.axis_mults) m[static_cast<std::size_t>(static_cast<int>(axis_variable(ax)))] = mult;
    return m;
}

struct SingularityPrediction {
    long long mu = 0;     // Milnor number at each preimage point
    long long branches = 0;
    long long delta = 0;  // (mu + branches - 1)/2
    long long preimage_points = 1;  // k^ptype
};

/// Milnor number and branch count of the Kummer transform over one base
/// point, from the base Milnor number and the computed axis multiplicities.
template <class F>
SingularityPrediction predict_singularity(const BaseSingularity<F>& s, int k) {
    if (k < 1) throw InvalidArgument("predict_singularity needs k >= 1");
    if (s.location.ptype == 2)
        throw TypeTwoPointError("type-2 points transform isomorphically; no formula is needed");
    if (!s.locally_irreducible)
        throw NotLocallyIrreducibleError("branch counts are defined only for locally irreducible base points");
    SingularityPrediction p;
    long long K = k;
    if (s.location.ptype == 1) {
        long long m = s.axis_mults.at(0).second;
        p.mu = K * s.mu + (m - 1) * (K - 1);
        p.branches = std::gcd(K, m);
        p.preimage_points = K;
    } else {
        long long m1 = s.axis_mults.at(0).second;
        long long m2 = s.axis_mults.at(1).second;
        p.mu = K * K * (s.mu - 1) + K * (K - 1) * (m1 + m2) + 1;
        p.branches = K * std::gcd(K, std::gcd(m1, m2));
        p.preimage_points = 1;
    }
    if ((p.mu + p.branches - 1) % 2 != 0)
        throw InvalidArgument("delta parity violated: mu=" + std::to_string(p.mu) +
                              " branches=" + std::to_string(p.branches));
    p.delta = (p.mu + p.branches - 1) / 2;
    return p;
}

/// Index of the monodromy subgroup of (Z/k)^2 generated by the puncture
/// images, i.e. the number of connected components of the normalized
/// pullback. Each puncture (m_x, m_y, m_z) maps to (m_y - m_x, m_z - m_x)
/// in the basis (a_y, a_z) with a_x + a_y + a_z = 0.
inline int component_count(const std::vector<std::array<int, 3>>& punctures, int k) {
    if (k < 1) throw InvalidArgument("component_count needs k >= 1");
    std::vector<std::array<long long, 2>> vecs;
    for (const auto& m : punctures) vecs.push_back({static_cast<long long>(m[1]) - m[0], static_cast<long long>(m[2]) - m[0]});
    vecs.push_back({k, 0});
    vecs.push_back({0, k});
    // the lattice has full rank, so its index is the gcd of all 2x2 minors
    long long g = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            long long det = vecs[i][0] * vecs[j][1] - vecs[i][1] * vecs[j][0];
            g = std::gcd(g, det < 0 ? -det : det);
            if (g == 1) return 1;
        }
    if (g == 0) throw InvalidArgument("puncture lattice degenerated to rank below two");
    return static_cast<int>(g);
}

struct PullbackGenus {
    int components = 0;
    long long genus_per_component = 0;
    long long euler_characteristic = 0;  // of the normalized pullback
    long long delta_total = 0;
};

/// Genus of the normalized Kummer transform by two independent routes:
/// Riemann-Hurwitz over the base normalization (a sphere) and degree-delta
/// on the pullback; their agreement is asserted.
template <class F>
PullbackGenus genus_pullback(const HomPoly<F>& base, const std::vector<BaseSingularity<F>>& points, bool base_rational,
                             int k) {
    if (!base_rational) throw HypothesisViolatedError("genus routes assume a rational base curve");
    for (const auto& s : points)
        if (!s.locally_irreducible)
            throw HypothesisViolatedError("genus routes assume locally irreducible base singularities");

    std::vector<std::array<int, 3>> meridians;
    for (const auto& s : points) meridians.push_back(meridian_triple(s));
    int c = component_count(meridians, k);

    long long K = k;
    long long n = static_cast<long long>(points.size());
    long long chi = K * K * (2 - n);
    long long delta_total = 0;
    for (const auto& s : points) {
        auto p = predict_singularity(s, k);
        chi += p.preimage_points * p.branches;
        delta_total += p.preimage_points * p.delta;
    }

    if (chi % c != 0)
        throw RoutesDisagreeError("Euler characteristic " + std::to_string(chi) + " not divisible by " +
                                  std::to_string(c) + " components");
    long long chi_comp = chi / c;
    if ((2 - chi_comp) % 2 != 0) throw RoutesDisagreeError("per-component Euler characteristic has odd genus defect");
    long long g_rh = (2 - chi_comp) / 2;

    long long D = static_cast<long long>(base.degree()) * k;
    long long g_sum = (D - 1) * (D - 2) / 2 - delta_total + (c - 1);
    if (g_sum % c != 0)
        throw RoutesDisagreeError("total geometric genus " + std::to_string(g_sum) + " not divisible by " +
                                  std::to_string(c) + " components");
    long long g_dd = g_sum / c;

    if (g_rh != g_dd)
        throw RoutesDisagreeError("genus routes disagree: Riemann-Hurwitz " + std::to_string(g_rh) +
                                  ", degree-delta " + std::to_string(g_dd));

    PullbackGenus out;
    out.components = c;
    out.genus_per_component = g_rh;
    out.euler_characteristic = chi;
    out.delta_total = delta_total;
    return out;
}

}  // namespace freelab
