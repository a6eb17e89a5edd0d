// Command-line front end: classify curves, predict Kummer pullbacks, and run
// the built-in verification suites.

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "freelab/freelab.hpp"

using namespace freelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNonReduced = 2;
constexpr int kExitParse = 3;
constexpr int kExitRoutesDisagree = 4;
constexpr int kExitHypothesis = 5;

constexpr int kSlowDegree = 30;

struct ClassifyOptions {
    std::string poly_text;
    std::string family;
    int k = 1;
    std::string field = "fp";
    std::uint64_t prime = kDefaultPrime;
    bool json = false;
    bool allow_slow = false;
};

void print_human_report(const CurveReport& rep) {
    std::printf("degree          %d\n", rep.degree);
    std::printf("mdr             %d\n", rep.mdr);
    std::printf("tau             %lld\n", rep.tau);
    std::printf("class           %s\n", curve_class_name(rep.cls));
    std::string ex;
    for (std::size_t i = 0; i < rep.exponents.size(); ++i)
        ex += (i ? "," : "") + std::to_string(rep.exponents[i]);
    std::printf("exponents       (%s)\n", ex.c_str());
    std::string prof;
    for (const auto& [m, n] : rep.n_profile) prof += "[" + std::to_string(m) + ":" + std::to_string(n) + "]";
    std::printf("n_profile       %s\n", prof.empty() ? "0" : prof.c_str());
    if (rep.rigid) std::printf("rigid           %s\n", *rep.rigid ? "true" : "false");
    if (rep.relation_multidegree)
        std::printf("relation        (%d,%d,%d)\n", (*rep.relation_multidegree)[0], (*rep.relation_multidegree)[1],
                    (*rep.relation_multidegree)[2]);
    if (rep.b) std::printf("b               %d\n", *rep.b);
    std::printf("timings_ms      A=%lld B=%lld C=%lld\n", static_cast<long long>(rep.route_a_ms),
                static_cast<long long>(rep.route_b_ms), static_cast<long long>(rep.route_c_ms));
}

template <class F>
int run_classify_typed(const F& K, const ClassifyOptions& opt) {
    HomPoly<F> f(K);
    if (!opt.family.empty()) {
        auto name = family_from_string(opt.family);
        if (!name) {
            std::fprintf(stderr, "unknown family '%s'\n", opt.family.c_str());
            return kExitParse;
        }
        f = make_family(K, *name, opt.k).poly;
    } else {
        f = parse_poly(opt.poly_text, K);
    }
    if (f.degree() > kSlowDegree && !opt.allow_slow) {
        std::fprintf(stderr,
                     "degree %d exceeds the fast-path bound %d; rerun with --allow-slow to proceed\n",
                     f.degree(), kSlowDegree);
        return kExitFailure;
    }
    auto rep = analyze(f);
    InputDescription input{f.str(), F::name(), opt.prime};
    if (opt.json)
        std::printf("%s\n", report_to_json(rep, input).dump(2).c_str());
    else
        print_human_report(rep);
    return kExitOk;
}

int run_classify(const ClassifyOptions& opt) {
    try {
        if (opt.field == "q") {
            QQ K;
            return run_classify_typed(K, opt);
        }
        GFp K(opt.prime);
        return run_classify_typed(K, opt);
    } catch (const NonReducedInputError& e) {
        std::fprintf(stderr, "non-reduced input: %s\n", e.what());
        return kExitNonReduced;
    } catch (const RoutesDisagreeError& e) {
        std::fprintf(stderr, "routes disagree (please report this with the input below):\n  %s\n  input: %s\n",
                     e.what(), opt.family.empty() ? opt.poly_text.c_str() : opt.family.c_str());
        return kExitRoutesDisagree;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const NotHomogeneousError& e) {
        std::fprintf(stderr, "not homogeneous: %s\n", e.what());
        return kExitParse;
    } catch (const ZeroPolynomialError& e) {
        std::fprintf(stderr, "zero polynomial: %s\n", e.what());
        return kExitParse;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
}

struct KummerOptions {
    std::string family;
    int k = 1;
    bool json = false;
    bool emit_poly = false;
};

template <class F>
int run_kummer_typed(const F& K, const KummerOptions& opt) {
    auto name = family_from_string(opt.family);
    if (!name) {
        std::fprintf(stderr, "unknown family '%s'\n", opt.family.c_str());
        return kExitParse;
    }
    auto fam = make_family(K, *name, 1);
    if (!fam.has_kummer_metadata)
        throw HypothesisViolatedError(std::string("family ") + family_name_str(*name) +
                                      " carries no base-curve metadata");
    std::vector<SingularityPrediction> preds;
    for (const auto& s : fam.base_points) preds.push_back(predict_singularity(s, opt.k));
    auto genus = genus_pullback(fam.base, fam.base_points, fam.base_rational, opt.k);

    if (opt.json) {
        auto doc = kummer_to_json(fam, opt.k, genus, preds);
        if (opt.emit_poly) doc["pullback_poly"] = fam.base.kummer_pullback(opt.k).str();
        std::printf("%s\n", doc.dump(2).c_str());
        return kExitOk;
    }
    std::printf("family %s, k = %d (pullback degree %d)\n", family_name_str(*name), opt.k,
                fam.base.degree() * opt.k);
    for (std::size_t i = 0; i < fam.base_points.size(); ++i) {
        const auto& s = fam.base_points[i];
        std::string mults;
        for (const auto& [ax, m] : s.axis_mults) mults += std::string(axis_name(ax)) + "=" + std::to_string(m) + " ";
        std::printf("  point %-7s type %d  mu_base=%-3d %-18s -> mu=%lld branches=%lld delta=%lld over %lld point(s)\n",
                    s.label.c_str(), s.location.ptype, s.mu, mults.c_str(), preds[i].mu, preds[i].branches,
                    preds[i].delta, preds[i].preimage_points);
    }
    std::printf("components      %d\n", genus.components);
    std::printf("genus/component %lld\n", genus.genus_per_component);
    std::printf("delta_total     %lld\n", genus.delta_total);
    if (opt.emit_poly) std::printf("pullback        %s\n", fam.base.kummer_pullback(opt.k).str().c_str());
    return kExitOk;
}

int run_kummer(const KummerOptions& opt) {
    try {
        GFp K(kDefaultPrime);
        return run_kummer_typed(K, opt);
    } catch (const HypothesisViolatedError& e) {
        std::fprintf(stderr, "hypothesis violated: %s\n", e.what());
        return kExitHypothesis;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
}

struct VerifyState {
    int passed = 0;
    int failed = 0;

    void report(bool ok, const std::string& what) {
        std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
        (ok ? passed : failed)++;
    }
};

void verify_golden(VerifyState& st, int max_k) {
    QQ K;
    for (int k = 1; k <= max_k; ++k) {
        for (FamilyName name : {FamilyName::c2k, FamilyName::c4k}) {
            auto fam = make_family(K, name, k);
            auto partials = partial_derivatives(fam.poly);
            auto golden = golden_syzygies(K, name, k);
            bool ok = true;
            for (const auto& v : golden.gens) ok = ok && v.dot(partials).is_zero();
            st.report(ok, std::string("golden syzygies ") + family_name_str(name) + " k=" + std::to_string(k));
            bool rok = true;
            for (int c = 0; c < 3 && golden.relation; ++c) {
                HomPoly<QQ> acc(K);
                for (int i = 0; i < 3; ++i) {
                    auto t = (*golden.relation)[static_cast<std::size_t>(i)] *
                             golden.gens[static_cast<std::size_t>(i)].component(c);
                    if (t.is_zero()) continue;
                    acc = acc.is_zero() ? t : acc + t;
                }
                rok = rok && acc.is_zero();
            }
            st.report(rok, std::string("golden relation ") + family_name_str(name) + " k=" + std::to_string(k));
        }
    }
    auto f5 = make_family(K, FamilyName::c5k, 1).poly;
    auto partials = partial_derivatives(f5);
    for (const auto& row : quintic_syzygy_table(K)) {
        bool ok = true;
        for (const auto* gen : {&row.gen1, &row.gen2}) {
            HomPoly<QQ> acc(K);
            for (std::size_t i = 0; i < 3; ++i) {
                auto t = (*gen)[i] * partials[i].term_multiplied(row.ideal_scale[i], K.one());
                if (t.is_zero()) continue;
                acc = acc.is_zero() ? t : acc + t;
            }
            ok = ok && acc.is_zero();
        }
        st.report(ok, "quintic table row " + row.label);
    }
}

void verify_oracle(VerifyState& st, int max_k) {
    GFp K(kDefaultPrime);
    for (FamilyName name : {FamilyName::c5k, FamilyName::c4k, FamilyName::c2k}) {
        for (int k = 1; k <= max_k; ++k) {
            auto fam = make_family(K, name, k);
            if (fam.poly.degree() > kSlowDegree) continue;
            auto partials = partial_derivatives(fam.poly);
            std::vector<HomPoly<GFp>> gens(partials.begin(), partials.end());
            auto degs = minimal_generator_degrees(K, syzygy_generators(fam.poly));
            bool mdr_ok = oracle::mdr_linear(fam.poly) == degs.front();
            st.report(mdr_ok, std::string("mdr equals smallest relation degree: ") + family_name_str(name) +
                                  " k=" + std::to_string(k));
            auto gb = ideal_groebner(K, gens);
            bool dims_ok = true;
            for (int m = 0; m <= 3 * fam.poly.degree(); ++m)
                dims_ok = dims_ok && oracle::quotient_dim_linear(K, gens, m) == hilbert_function(gb, m);
            st.report(dims_ok, std::string("graded dimensions match the groebner route: ") + family_name_str(name) +
                                   " k=" + std::to_string(k));
        }
    }
}

void verify_agreement(VerifyState& st, int max_k) {
    GFp K(kDefaultPrime);
    auto check = [&](const HomPoly<GFp>& f, const std::string& label,
                     std::optional<ExpectedInvariants> expected) {
        try {
            auto rep = analyze(f);
            bool ok = true;
            if (expected) {
                ok = rep.cls == expected->cls && rep.exponents == expected->exponents && rep.tau == expected->tau;
            }
            st.report(ok, "route agreement: " + label);
        } catch (const Error& e) {
            st.report(false, "route agreement: " + label + " (" + e.what() + ")");
        }
    };
    for (FamilyName name : {FamilyName::c5k, FamilyName::c4k, FamilyName::c2k}) {
        for (int k = 1; k <= max_k; ++k) {
            auto fam = make_family(K, name, k);
            if (fam.poly.degree() > kSlowDegree) continue;
            check(fam.poly, std::string(family_name_str(name)) + " k=" + std::to_string(k), fam.expected);
        }
    }
    check(make_family(K, FamilyName::d5, 1).poly, "d5", make_family(K, FamilyName::d5, 1).expected);
    check(parse_poly("x^3+y^3+z^3", K), "smooth cubic",
          ExpectedInvariants{CurveClass::Neither, {}, 0});
    try {
        auto rep = analyze(parse_poly("x*y*(x+y)", K));
        st.report(rep.cls == CurveClass::PencilOfLines, "route agreement: three concurrent lines");
    } catch (const Error& e) {
        st.report(false, std::string("route agreement: three concurrent lines (") + e.what() + ")");
    }
}

int run_verify(const std::string& suite, int max_k) {
    VerifyState st;
    if (suite == "golden" || suite == "all") verify_golden(st, max_k);
    if (suite == "oracle" || suite == "all") verify_oracle(st, max_k);
    if (suite == "all") verify_agreement(st, max_k);
    std::printf("%d passed, %d failed\n", st.passed, st.failed);
    return st.failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of plane projective curves: free, nearly free, or neither."};
    app.require_subcommand(1);

    ClassifyOptions copt;
    auto* classify = app.add_subcommand("classify", "Classify a curve and report its invariants");
    auto* poly_opt = classify->add_option("--poly", copt.poly_text, "Curve equation, e.g. \"x^3+y^3+z^3\"");
    auto* family_opt = classify->add_option("--family", copt.family, "Named family: c5k c4k c2k c49 c49gen d5");
    classify->add_option("--k", copt.k, "Family parameter k")->check(CLI::PositiveNumber);
    classify->add_option("--field", copt.field, "Coefficient field: q or fp")
        ->check(CLI::IsMember({"q", "fp"}))
        ->capture_default_str();
    classify->add_option("--prime", copt.prime, "Prime for fp")->capture_default_str();
    classify->add_flag("--json", copt.json, "Emit the JSON report document");
    classify->add_flag("--allow-slow", copt.allow_slow, "Allow degrees above 30");
    poly_opt->excludes(family_opt);
    family_opt->excludes(poly_opt);

    KummerOptions kopt;
    auto* kummer = app.add_subcommand("kummer", "Predict pullback singularities, components, and genus");
    kummer->add_option("--family", kopt.family, "Family with base metadata: c5k c4k c2k")->required();
    kummer->add_option("--k", kopt.k, "Cover exponent k")->check(CLI::PositiveNumber);
    kummer->add_flag("--json", kopt.json, "Emit JSON");
    kummer->add_flag("--emit-poly", kopt.emit_poly, "Also print the pullback polynomial");

    std::string suite = "all";
    int max_k = 3;
    auto* verify = app.add_subcommand("verify", "Run the built-in verification suites");
    verify->add_option("--suite", suite, "golden, oracle, or all")
        ->check(CLI::IsMember({"golden", "oracle", "all"}))
        ->capture_default_str();
    verify->add_option("--max-k", max_k, "Largest family parameter exercised")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        if (copt.poly_text.empty() && copt.family.empty()) {
            std::fprintf(stderr, "classify needs exactly one of --poly or --family\n");
            return kExitParse;
        }
        return run_classify(copt);
    }
    if (kummer->parsed()) return run_kummer(kopt);
    return run_verify(suite, max_k);
}
