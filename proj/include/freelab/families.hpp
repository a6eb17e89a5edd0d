#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "freelab/freeness.hpp"
#include "freelab/kummer.hpp"
#include "freelab/polynomial.hpp"
#include "freelab/syzygy.hpp"

namespace freelab {

enum class FamilyName { c5k, c4k, c2k, c49, c49gen, d5 };

inline const char* family_name_str(FamilyName n) {
    switch (n) {
        case FamilyName::c5k: return "c5k";
        case FamilyName::c4k: return "c4k";
        case FamilyName::c2k: return "c2k";
        case FamilyName::c49: return "c49";
        case FamilyName::c49gen: return "c49gen";
        default: return "d5";
    }
}

inline std::optional<FamilyName> family_from_string(const std::string& s) {
    for (FamilyName n : {FamilyName::c5k, FamilyName::c4k, FamilyName::c2k, FamilyName::c49, FamilyName::c49gen,
                         FamilyName::d5})
        if (s == family_name_str(n)) return n;
    return std::nullopt;
}

struct ExpectedInvariants {
    CurveClass cls;
    std::vector<int> exponents;
    long long tau = 0;
};

template <class F>
struct FamilyDescriptor {
    FamilyName name;
    int k = 1;
    HomPoly<F> poly;
    HomPoly<F> base;  // the k = 1 member
    std::vector<BaseSingularity<F>> base_points;
    bool base_rational = false;
    bool has_kummer_metadata = false;
    std::optional<ExpectedInvariants> expected;
    std::string notes;  // opaque documentation carried with the family
};

namespace detail {

template <class F>
HomPoly<F> vp(const F& K, Var v, int e) {
    return HomPoly<F>::variable(K, v, e);
}

template <class F>
HomPoly<F> ci(const F& K, long long n) {
    return HomPoly<F>::constant(K, K.from_int(n));
}

template <class F>
AxisPoint<F> point(const F& K, int x0, int y0, int z0) {
    return classify_point(K, {K.from_int(x0), K.from_int(y0), K.from_int(z0)});
}

}  // namespace detail

/// The curve families, with base-curve metadata for the Kummer machinery.
template <class F>
FamilyDescriptor<F> make_family(const F& K, FamilyName name, int k) {
    using detail::ci;
    using detail::point;
    using detail::vp;
    if (k < 1) throw InvalidArgument("family parameter k must be positive");
    if ((name == FamilyName::c49 || name == FamilyName::c49gen || name == FamilyName::d5) && k != 1)
        throw InvalidArgument("this family is defined for k = 1 only");

    FamilyDescriptor<F> fam;
    fam.name = name;
    fam.k = k;

    auto x = vp(K, Var::x, 1), y = vp(K, Var::y, 1), z = vp(K, Var::z, 1);

    switch (name) {
        case FamilyName::c5k: {
            auto a = vp(K, Var::y, 1) * vp(K, Var::z, 1) - vp(K, Var::x, 2);
            fam.base = a * a * y - vp(K, Var::x, 5);
            fam.poly = fam.base.kummer_pullback(k);
            fam.base_rational = true;
            fam.has_kummer_metadata = true;
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 0, 1, 0), 4, true, "A4"));
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 0, 0, 1), 8, true, "E8"));
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 1, 1, 0), 0, true, "smooth"));
            fam.expected = ExpectedInvariants{CurveClass::Free, {2 * k, 3 * k - 1},
                                              19LL * k * k - 8LL * k + 1};
            break;
        }
        case FamilyName::c4k: {
            auto a = vp(K, Var::y, 1) * vp(K, Var::z, 1) - vp(K, Var::x, 2);
            fam.base = a * a - vp(K, Var::x, 3) * y;
            fam.poly = fam.base.kummer_pullback(k);
            fam.base_rational = true;
            fam.has_kummer_metadata = true;
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 0, 1, 0), 2, true, "A2"));
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 0, 0, 1), 4, true, "A4"));
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 1, 1, 0), 0, true, "smooth"));
            fam.expected = ExpectedInvariants{CurveClass::NearlyFree, {2 * k, 2 * k, 2 * k},
                                              6LL * k * (2 * k - 1)};
            break;
        }
        case FamilyName::c2k: {
            fam.base = vp(K, Var::x, 2) + vp(K, Var::y, 2) + vp(K, Var::z, 2) -
                       ci(K, 2) * (x * y + x * z + y * z);
            fam.poly = fam.base.kummer_pullback(k);
            fam.base_rational = true;
            fam.has_kummer_metadata = true;
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 0, 1, 1), 0, true, "smooth"));
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 1, 0, 1), 0, true, "smooth"));
            fam.base_points.push_back(make_base_singularity(fam.base, point(K, 1, 1, 0), 0, true, "smooth"));
            fam.expected = ExpectedInvariants{CurveClass::NearlyFree, {k, k, k}, 3LL * k * (k - 1)};
            break;
        }
        case FamilyName::d5: {
            fam.base = vp(K, Var::y, 3) * vp(K, Var::z, 2) - vp(K, Var::x, 5);
            fam.poly = fam.base;
            fam.expected = ExpectedInvariants{CurveClass::NearlyFree, {1, 4, 4}, 12};
            break;
        }
        case FamilyName::c49:
        case FamilyName::c49gen: {
            auto f1 = vp(K, Var::x, 3) * z + vp(K, Var::y, 4);
            auto f13 = f1.pow(3) * y + vp(K, Var::x, 13);
            auto numerator = f13.pow(4) - f1.pow(13);
            auto f49 = numerator.divided_by_monomial(Monomial{3, 0, 0});
            fam.base = f49;
            if (name == FamilyName::c49) {
                fam.poly = f49;
                fam.notes = "multiplicity sequence of the singular point: [36,12_7,4_6] (carried as documentation)";
            } else {
                fam.poly = f49 + ci(K, 13) * f13 * f1.pow(9);
                fam.notes = "general pencil member; rational with one singular point of 4 branches (documented, "
                            "not computed here)";
                fam.expected = ExpectedInvariants{CurveClass::NearlyFree, {24, 25, 25}, 1727};
            }
            break;
        }
    }

    int expected_degree = 0;
    switch (name) {
        case FamilyName::c5k: expected_degree = 5 * k; break;
        case FamilyName::c4k: expected_degree = 4 * k; break;
        case FamilyName::c2k: expected_degree = 2 * k; break;
        case FamilyName::d5: expected_degree = 5; break;
        default: expected_degree = 49; break;
    }
    if (fam.poly.degree() != expected_degree)
        throw InvalidArgument(std::string("family ") + family_name_str(name) + " constructed with degree " +
                              std::to_string(fam.poly.degree()) + ", expected " + std::to_string(expected_degree));
    return fam;
}

template <class F>
struct GoldenSyzygies {
    std::vector<SyzygyVector<F>> gens;
    std::optional<std::array<HomPoly<F>, 3>> relation;  // v with sum v_i R_i = 0
};

/// The explicit syzygy families from the theorems' proofs, verbatim.
template <class F>
GoldenSyzygies<F> golden_syzygies(const F& K, FamilyName name, int k) {
    using detail::ci;
    using detail::vp;
    auto x = vp(K, Var::x, 1), y = vp(K, Var::y, 1), z = vp(K, Var::z, 1);
    auto xp = [&](int e) { return vp(K, Var::x, e); };
    auto yp = [&](int e) { return vp(K, Var::y, e); };
    auto zp = [&](int e) { return vp(K, Var::z, e); };
    GoldenSyzygies<F> out;
    switch (name) {
        case FamilyName::c2k: {
            out.gens.push_back(SyzygyVector<F>::make(K, yp(k) - zp(k), xp(k - 1) * y, -(xp(k - 1) * z)));
            out.gens.push_back(SyzygyVector<F>::make(K, -(x * yp(k - 1)), zp(k) - xp(k), yp(k - 1) * z));
            out.gens.push_back(SyzygyVector<F>::make(K, x * zp(k - 1), -(y * zp(k - 1)), xp(k) - yp(k)));
            out.relation = {x, y, z};
            return out;
        }
        case FamilyName::c4k: {
            out.gens.push_back(SyzygyVector<F>::make(
                K, yp(k) * (ci(K, 3) * xp(k) - ci(K, 4) * zp(k)),
                ci(K, 3) * xp(k - 1) * y * (ci(K, 4) * xp(k) - ci(K, 3) * yp(k)),
                xp(k - 1) * z * (ci(K, 9) * yp(k) - ci(K, 20) * xp(k))));
            out.gens.push_back(SyzygyVector<F>::make(
                K, -(x * yp(k - 1) * (xp(k) + ci(K, 2) * zp(k))),
                ci(K, -4) * xp(2 * k) + ci(K, 3) * xp(k) * yp(k) + ci(K, 10) * yp(k) * zp(k),
                -(yp(k - 1) * z * (ci(K, 3) * xp(k) + ci(K, 10) * zp(k)))));
            out.gens.push_back(SyzygyVector<F>::make(K, x * yp(k) * zp(k - 1), ci(K, -3) * yp(k + 1) * zp(k - 1),
                                                     ci(K, 2) * xp(2 * k) + ci(K, 3) * yp(k) * zp(k)));
            out.relation = {x, ci(K, 3) * y, ci(K, 10) * z};
            return out;
        }
        case FamilyName::c5k: {
            if (k != 1) throw InvalidArgument("golden c5k syzygies are recorded for k = 1 only");
            // Table row for the Jacobian ideal: R1*D(1,y,1) and R2*D(1,1,z)
            out.gens.push_back(
                SyzygyVector<F>::make(K, HomPoly<F>(K), ci(K, 2) * yp(2), xp(2) - ci(K, 3) * y * z));
            out.gens.push_back(SyzygyVector<F>::make(
                K, ci(K, 2) * (xp(2) - y * z),
                ci(K, 2) * (ci(K, 5) * xp(2) - ci(K, 4) * x * y + ci(K, 15) * y * z),
                z * (ci(K, 8) * x - ci(K, 45) * z)));
            return out;
        }
        default:
            throw InvalidArgument("no golden syzygy data for this family");
    }
}

/// One row of the quintic's syzygy table: which scaled ideal it concerns and
/// the two generator triples (not graded as vectors; only the dot identity
/// with the scaled partials is asserted).
template <class F>
struct QuinticTableRow {
    std::string label;
    std::array<Monomial, 3> ideal_scale;  // ideal generated by scale_i * partial_i
    std::array<HomPoly<F>, 3> gen1, gen2;
};

template <class F>
std::vector<QuinticTableRow<F>> quintic_syzygy_table(const F& K) {
    using detail::ci;
    using detail::vp;
    auto x = vp(K, Var::x, 1), y = vp(K, Var::y, 1), z = vp(K, Var::z, 1);
    auto one = detail::ci(K, 1);
    std::array<HomPoly<F>, 3> R1{HomPoly<F>(K), ci(K, 2) * y, vp(K, Var::x, 2) - ci(K, 3) * y * z};
    std::array<HomPoly<F>, 3> R2{ci(K, 2) * (vp(K, Var::x, 2) - y * z),
                                 ci(K, 2) * (ci(K, 5) * vp(K, Var::x, 2) - ci(K, 4) * x * y + ci(K, 15) * y * z),
                                 ci(K, 8) * x - ci(K, 45) * z};
    auto scaled = [&](const std::array<HomPoly<F>, 3>& R, const HomPoly<F>& a, const HomPoly<F>& b,
                      const HomPoly<F>& c) {
        return std::array<HomPoly<F>, 3>{R[0] * a, R[1] * b, R[2] * c};
    };
    const Monomial m1{}, mx{1, 0, 0}, my{0, 1, 0}, mz{0, 0, 1};
    std::vector<QuinticTableRow<F>> rows;
    rows.push_back({"J", {m1, m1, m1}, scaled(R1, one, y, one), scaled(R2, one, one, z)});
    rows.push_back({"J_x", {mx, m1, m1}, scaled(R1, one, y, one), scaled(R2, one, x, x * z)});
    rows.push_back({"J_y", {m1, my, m1}, R1, scaled(R2, y, one, y * z)});
    rows.push_back({"J_z", {m1, m1, mz}, scaled(R1, one, y * z, one), R2});
    rows.push_back({"J_xy", {mx, my, m1}, R1, scaled(R2, y, x, x * y * z)});
    rows.push_back({"J_xz", {mx, m1, mz}, scaled(R1, one, y * z, one), scaled(R2, one, x, x)});
    rows.push_back({"J_yz", {m1, my, mz}, scaled(R1, one, z, one), scaled(R2, y, one, y)});
    rows.push_back({"J_xyz", {mx, my, mz}, scaled(R1, one, z, one), scaled(R2, y, x, x * y)});
    return rows;
}

}  // namespace freelab
