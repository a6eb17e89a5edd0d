#pragma once

#include <array>
#include <chrono>
#include <cstdlib>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "freelab/groebner.hpp"
#include "freelab/oracle.hpp"
#include "freelab/syzygy.hpp"

namespace freelab {

enum class CurveClass { Free, NearlyFree, Neither, PencilOfLines };

inline const char* curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::Free: return "Free";
        case CurveClass::NearlyFree: return "NearlyFree";
        case CurveClass::Neither: return "Neither";
        default: return "PencilOfLines";
    }
}

/// du Plessis-Wall bound (d-1)(d-r-1) + r^2.
inline long long tau_max(int d, int r) {
    if (r < 0 || r > d - 1) throw InvalidArgument("tau_max needs 0 <= r <= d-1");
    return static_cast<long long>(d - 1) * (d - r - 1) + static_cast<long long>(r) * r;
}

/// Numeric characterization: free iff 2r < d and tau hits the bound, nearly
/// free iff 2r <= d and tau falls short by one. The boundary case 2r = d with
/// tau at the bound is classified Neither.
inline CurveClass classify_dpw(int d, int r, long long tau) {
    if (r < 1) throw InvalidArgument("classify_dpw needs r >= 1");
    if (tau < 0) throw InvalidArgument("classify_dpw needs tau >= 0");
    if (2 * r < d && tau == tau_max(d, r)) return CurveClass::Free;
    if (2 * r <= d && tau == tau_max(d, r) - 1) return CurveClass::NearlyFree;
    return CurveClass::Neither;
}

/// Full classification output.
struct CurveReport {
    int degree = 0;
    int mdr = 0;
    long long tau = 0;
    CurveClass cls = CurveClass::Neither;
    std::vector<int> exponents;  // (d1,d2) free, (d1,d2,d3) nearly free
    GradedDims n_profile;
    std::optional<bool> rigid;
    std::optional<bool> rigid_by_saturation;  // (I_f)_d = (J_f)_d, the definition
    std::optional<std::array<int, 3>> relation_multidegree;
    std::optional<int> b;  // d2 - d + 2, nearly free only
    std::int64_t route_a_ms = 0, route_b_ms = 0, route_c_ms = 0;
};

/// Worker cap from FREENESS_LAB_THREADS; 0 means auto, unset means 1.
inline unsigned worker_cap() {
    const char* env = std::getenv("FREENESS_LAB_THREADS");
    if (!env || !*env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 0) return 1;
    if (v == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1;
    }
    return static_cast<unsigned>(v);
}

namespace detail {

struct RouteVerdict {
    CurveClass cls = CurveClass::Neither;
    std::vector<int> exponents;
    std::optional<std::array<int, 3>> relation_multidegree;
};

/// Route A: shape of a minimal generating system of ar(f).
template <class F>
RouteVerdict route_resolution(const HomPoly<F>& f) {
    const F& K = f.field();
    int d = f.degree();
    auto gens = syzygy_generators(f);
    auto mins = minimal_generators(K, gens);
    std::sort(mins.begin(), mins.end(),
              [](const SyzygyVector<F>& a, const SyzygyVector<F>& b) { return a.degree < b.degree; });

    RouteVerdict v;
    if (mins.size() < 2) throw InconsistentResolutionError("relation module with fewer than two minimal generators");
    if (mins.size() == 2) {
        int d1 = mins[0].degree, d2 = mins[1].degree;
        if (d1 + d2 != d - 1)
            throw InconsistentResolutionError("two minimal relations of degrees " + std::to_string(d1) + "," +
                                              std::to_string(d2) + " but d1+d2 != d-1");
        GBContext<F> ctx{K, 3, {}};
        std::vector<ModElem<F>> input{mins[0].as_module_element(K), mins[1].as_module_element(K)};
        for (const auto& row : syzygy_harvest(ctx, input))
            if (!row.is_zero())
                throw InconsistentResolutionError("free resolution shape carries an unexpected second syzygy");
        v.cls = CurveClass::Free;
        v.exponents = {d1, d2};
        return v;
    }
    if (mins.size() == 3) {
        int e1 = mins[0].degree, e2 = mins[1].degree, e3 = mins[2].degree;
        if (!(e2 == e3 && e1 + e2 == d)) {
            v.cls = CurveClass::Neither;
            return v;
        }
        SecondSyzygy<F> rel;
        try {
            rel = second_syzygy_relation(K, std::array<SyzygyVector<F>, 3>{mins[0], mins[1], mins[2]});
        } catch (const NoRelationError&) {
            throw InconsistentResolutionError("nearly free generator degrees but no second syzygy");
        } catch (const RankTooHighError&) {
            throw InconsistentResolutionError("nearly free generator degrees but second syzygy rank above one");
        }
        std::array<int, 3> expected{e2 - e1 + 1, 1, 1};
        if (rel.multidegree != expected)
            throw InconsistentResolutionError("second syzygy multidegree differs from the mandated one");
        v.cls = CurveClass::NearlyFree;
        v.exponents = {e1, e2, e3};
        v.relation_multidegree = rel.multidegree;
        return v;
    }
    v.cls = CurveClass::Neither;
    return v;
}

struct DpwVerdict {
    CurveClass cls;
    std::vector<int> exponents;
    int mdr = 0;
    long long tau = 0;
};

/// Route B: du Plessis-Wall numerics on (d, mdr, tau) with tau read from the
/// stabilized Hilbert function of the Jacobian ring.
template <class F>
DpwVerdict route_dpw(const HomPoly<F>& f) {
    const F& K = f.field();
    int d = f.degree();
    auto partials = partial_derivatives(f);
    std::vector<HomPoly<F>> gens(partials.begin(), partials.end());
    auto gb = ideal_groebner(K, gens);
    int stab = 3 * d - 3;
    int t0 = hilbert_function(gb, stab);
    int t1 = hilbert_function(gb, stab + 1);
    int t2 = hilbert_function(gb, stab + 2);
    if (t0 != t1 || t1 != t2)
        throw NonReducedInputError("Hilbert function still moving at degree " + std::to_string(stab) + ": " +
                                   std::to_string(t0) + "," + std::to_string(t1) + "," + std::to_string(t2));
    DpwVerdict v;
    v.tau = t0;
    v.mdr = oracle::mdr_linear(f);
    v.cls = classify_dpw(d, v.mdr, v.tau);
    if (v.cls == CurveClass::Free)
        v.exponents = {v.mdr, d - 1 - v.mdr};
    else if (v.cls == CurveClass::NearlyFree)
        v.exponents = {v.mdr, d - v.mdr, d - v.mdr};
    std::sort(v.exponents.begin(), v.exponents.end());
    return v;
}

struct ProfileVerdict {
    CurveClass cls;
    std::vector<int> exponents;
    GradedDims n_profile;
    long long tau = 0;
    bool rigid_by_saturation = false;
};

/// Route C: the graded N(f) profile from degreewise saturation.
template <class F>
ProfileVerdict route_profile(const HomPoly<F>& f) {
    const F& K = f.field();
    int d = f.degree();
    auto partials = partial_derivatives(f);
    std::vector<HomPoly<F>> gens(partials.begin(), partials.end());
    int stab = 3 * d - 3;
    auto table = oracle::build_saturation_table(f, stab);
    int t1 = oracle::quotient_dim_linear(K, gens, stab + 1);
    int t2 = oracle::quotient_dim_linear(K, gens, stab + 2);
    if (table.tau != t1 || t1 != t2)
        throw NonReducedInputError("saturation route sees an unstabilized Hilbert function at degree " +
                                   std::to_string(stab));

    ProfileVerdict v;
    v.tau = table.tau;
    int hi = std::max(3 * d - 5, d);
    bool all_le_one = true, any = false;
    for (int m = 0; m <= hi; ++m) {
        int n = oracle::saturation_defect(K, f, table, m);
        if (n > 0) {
            v.n_profile[m] = n;
            any = true;
            if (n > 1) all_le_one = false;
        }
        if (m == d) v.rigid_by_saturation = (n == 0);
    }
    if (!any) {
        v.cls = CurveClass::Free;
        return v;
    }
    if (!all_le_one) {
        v.cls = CurveClass::Neither;
        return v;
    }
    v.cls = CurveClass::NearlyFree;
    int lo_m = v.n_profile.begin()->first;
    int hi_m = v.n_profile.rbegin()->first;
    if (static_cast<int>(v.n_profile.size()) != hi_m - lo_m + 1)
        throw InconsistentResolutionError("nearly free N(f) support is not one contiguous interval");
    int d1 = lo_m - d + 3, d2 = hi_m - d + 3;
    if (d1 + d2 != d)
        throw InconsistentResolutionError("N(f) support interval incompatible with nearly freeness");
    v.exponents = {d1, d2, d2};
    return v;
}

inline std::string verdict_text(CurveClass c, const std::vector<int>& ex) {
    std::ostringstream os;
    os << curve_class_name(c) << " (";
    for (std::size_t i = 0; i < ex.size(); ++i) os << (i ? "," : "") << ex[i];
    os << ")";
    return os.str();
}

}  // namespace detail

/// Classification by resolution shape alone (route A), exposed for direct use.
template <class F>
std::pair<CurveClass, std::vector<int>> classify_resolution(const HomPoly<F>& f) {
    auto v = detail::route_resolution(f);
    return {v.cls, v.exponents};
}

/// Runs all three classification routes and returns the assembled report only
/// when they agree. Routes may run concurrently (FREENESS_LAB_THREADS >= 2).
template <class F>
CurveReport analyze(const HomPoly<F>& f) {
    const F& K = f.field();
    if (f.is_zero()) throw InvalidArgument("analyze needs a nonzero polynomial");
    int d = f.degree();
    if (d < 1) throw InvalidArgument("analyze needs degree >= 1");
    auto partials = partial_derivatives(f);
    if (partials[0].is_zero() && partials[1].is_zero() && partials[2].is_zero())
        throw NonReducedInputError("all partial derivatives vanish; the input is a p-th power");

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    };

    // pencil probe: a degree-0 relation exists iff the partials are dependent
    {
        std::vector<HomPoly<F>> gens(partials.begin(), partials.end());
        int nonzero = 0;
        for (const auto& g : gens)
            if (!g.is_zero()) ++nonzero;
        if (oracle::graded_dim_linear(K, gens, d - 1) < nonzero || nonzero < 3) {
            CurveReport rep;
            rep.degree = d;
            rep.mdr = 0;
            rep.cls = CurveClass::PencilOfLines;
            auto t0 = clock::now();
            auto gb = ideal_groebner(K, gens);
            int stab = 3 * d - 3;
            int v0 = hilbert_function(gb, stab);
            if (v0 != hilbert_function(gb, stab + 1) || v0 != hilbert_function(gb, stab + 2))
                throw NonReducedInputError("pencil input is not reduced");
            rep.tau = v0;
            rep.route_b_ms = ms_since(t0);
            return rep;
        }
    }

    detail::RouteVerdict A;
    detail::DpwVerdict B;
    detail::ProfileVerdict C;
    std::int64_t a_ms = 0, b_ms = 0, c_ms = 0;
    auto run_a = [&] {
        auto t0 = clock::now();
        A = detail::route_resolution(f);
        a_ms = ms_since(t0);
    };
    auto run_b = [&] {
        auto t0 = clock::now();
        B = detail::route_dpw(f);
        b_ms = ms_since(t0);
    };
    auto run_c = [&] {
        auto t0 = clock::now();
        C = detail::route_profile(f);
        c_ms = ms_since(t0);
    };
    if (worker_cap() >= 2) {
        auto fb = std::async(std::launch::async, run_b);
        auto fc = std::async(std::launch::async, run_c);
        run_a();
        fb.get();
        fc.get();
    } else {
        run_a();
        run_b();
        run_c();
    }

    if (A.cls != B.cls || B.cls != C.cls)
        throw RoutesDisagreeError("routes disagree: A=" + detail::verdict_text(A.cls, A.exponents) +
                                  " B=" + detail::verdict_text(B.cls, B.exponents) +
                                  " C=" + detail::verdict_text(C.cls, C.exponents));
    if (B.tau != C.tau)
        throw RoutesDisagreeError("tau mismatch: Groebner route " + std::to_string(B.tau) + ", saturation route " +
                                  std::to_string(C.tau));
    if (!B.exponents.empty() && A.exponents != B.exponents)
        throw RoutesDisagreeError("exponent mismatch: A=" + detail::verdict_text(A.cls, A.exponents) +
                                  " B=" + detail::verdict_text(B.cls, B.exponents));
    if (!C.exponents.empty() && A.exponents != C.exponents)
        throw RoutesDisagreeError("exponent mismatch: A=" + detail::verdict_text(A.cls, A.exponents) +
                                  " C=" + detail::verdict_text(C.cls, C.exponents));

    CurveReport rep;
    rep.degree = d;
    rep.mdr = B.mdr;
    rep.tau = B.tau;
    rep.cls = A.cls;
    rep.exponents = A.exponents;
    rep.n_profile = C.n_profile;
    rep.rigid_by_saturation = C.rigid_by_saturation;
    rep.relation_multidegree = A.relation_multidegree;
    rep.route_a_ms = a_ms;
    rep.route_b_ms = b_ms;
    rep.route_c_ms = c_ms;

    if (rep.cls == CurveClass::Free) {
        int d1 = rep.exponents[0], d2 = rep.exponents[1];
        if (d1 + d2 != d - 1 || rep.tau != static_cast<long long>(d - 1) * (d - 1) - static_cast<long long>(d1) * d2)
            throw InconsistentResolutionError("free exponent identities violated in assembled report");
        if (rep.mdr != d1) throw RoutesDisagreeError("mdr differs from the smallest exponent");
        if (!rep.n_profile.empty()) throw RoutesDisagreeError("free curve with nonzero N(f)");
        rep.rigid = true;
        if (!*rep.rigid_by_saturation)
            throw RoutesDisagreeError("free curve fails the saturation rigidity identity");
    } else if (rep.cls == CurveClass::NearlyFree) {
        int d1 = rep.exponents[0], d2 = rep.exponents[1];
        if (d1 + d2 != d || rep.exponents[1] != rep.exponents[2] ||
            rep.tau != static_cast<long long>(d - 1) * (d - 1) - static_cast<long long>(d1) * (d2 - 1) - 1)
            throw InconsistentResolutionError("nearly free exponent identities violated in assembled report");
        if (rep.mdr != d1) throw RoutesDisagreeError("mdr differs from the smallest exponent");
        long long total = 0;
        for (const auto& [m, n] : rep.n_profile) total += n;
        if (total != d2 - d1 + 1)
            throw InconsistentResolutionError("N(f) total differs from the exponent interval length");
        // the emitted flag follows the d1 >= 4 characterization; the
        // saturation identity agrees with it whenever d2 >= 3
        rep.b = d2 - d + 2;
        rep.rigid = (d1 >= 4);
        if (d2 >= 3 && *rep.rigid != *rep.rigid_by_saturation)
            throw RoutesDisagreeError("nearly free rigidity characterization disagrees with the saturation identity");
    } else {
        rep.rigid = rep.rigid_by_saturation;
    }
    return rep;
}

}  // namespace freelab
