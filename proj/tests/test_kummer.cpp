#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "freelab/families.hpp"
#include "freelab/kummer.hpp"
#include "freelab/parser.hpp"
#include "newton_support.hpp"

using namespace freelab;

namespace {

const BaseSingularity<QQ>& point_labeled(const FamilyDescriptor<QQ>& fam, const std::string& label) {
    for (const auto& s : fam.base_points)
        if (s.label == label) return s;
    throw std::runtime_error("no such point: " + label);
}

}  // namespace

TEST_CASE("point types against the coordinate triangle") {
    QQ K;
    auto vertex = classify_point(K, {K.zero(), K.one(), K.zero()});
    CHECK(vertex.ptype == 0);
    CHECK(vertex.axes == std::vector<Axis>{Axis::Lx, Axis::Lz});

    auto side = classify_point(K, {K.zero(), K.one(), K.one()});
    CHECK(side.ptype == 1);
    CHECK(side.axes == std::vector<Axis>{Axis::Lx});

    auto open = classify_point(K, {K.one(), K.from_int(2), K.from_int(3)});
    CHECK(open.ptype == 2);
    CHECK(open.axes.empty());

    CHECK_THROWS_AS(classify_point(K, {K.zero(), K.zero(), K.zero()}), InvalidArgument);
}

TEST_CASE("computed axis multiplicities of the base curves") {
    QQ K;
    auto c5 = make_family(K, FamilyName::c5k, 1);
    auto a4 = meridian_triple(point_labeled(c5, "A4"));
    auto e8 = meridian_triple(point_labeled(c5, "E8"));
    auto sm = meridian_triple(point_labeled(c5, "smooth"));
    CHECK(a4 == std::array<int, 3>{2, 0, 4});
    CHECK(e8 == std::array<int, 3>{3, 5, 0});
    CHECK(sm == std::array<int, 3>{0, 0, 1});

    auto c4 = make_family(K, FamilyName::c4k, 1);
    CHECK(meridian_triple(point_labeled(c4, "A2")) == std::array<int, 3>{2, 0, 3});
    CHECK(meridian_triple(point_labeled(c4, "A4")) == std::array<int, 3>{2, 4, 0});

    auto c2 = make_family(K, FamilyName::c2k, 1);
    std::vector<std::array<int, 3>> mer;
    for (const auto& s : c2.base_points) mer.push_back(meridian_triple(s));
    CHECK(std::count(mer.begin(), mer.end(), std::array<int, 3>{2, 0, 0}) == 1);
    CHECK(std::count(mer.begin(), mer.end(), std::array<int, 3>{0, 2, 0}) == 1);
    CHECK(std::count(mer.begin(), mer.end(), std::array<int, 3>{0, 0, 2}) == 1);
}

TEST_CASE("k=1 reproduces the base data for every family point") {
    QQ K;
    for (FamilyName name : {FamilyName::c5k, FamilyName::c4k, FamilyName::c2k}) {
        auto fam = make_family(K, name, 1);
        for (const auto& s : fam.base_points) {
            auto p = predict_singularity(s, 1);
            CHECK(p.mu == s.mu);
            CHECK(p.branches == 1);  // all base points are locally irreducible
            CHECK(p.preimage_points == 1);
        }
    }
}

TEST_CASE("tangential type-1 points pull back to A_{k-1}") {
    QQ K;
    auto c2 = make_family(K, FamilyName::c2k, 1);
    const auto& s = c2.base_points.front();  // smooth tangency, m = 2
    for (int k = 1; k <= 9; ++k) {
        auto p = predict_singularity(s, k);
        CHECK(p.mu == k - 1);
        CHECK(p.branches == std::gcd(k, 2));
        CHECK(p.preimage_points == k);
    }
}

TEST_CASE("vertex predictions for the quintic") {
    QQ K;
    auto c5 = make_family(K, FamilyName::c5k, 1);
    const auto& e8 = point_labeled(c5, "E8");
    auto p3 = predict_singularity(e8, 3);
    CHECK(p3.mu == 112);  // 9*7 + 6*8 + 1
    CHECK(p3.branches == 3);
    CHECK(p3.preimage_points == 1);

    const auto& a4 = point_labeled(c5, "A4");
    auto p2 = predict_singularity(a4, 2);
    CHECK(p2.branches == 4);  // 2k when k is even
    for (int k = 1; k <= 10; ++k) {
        CHECK(predict_singularity(e8, k).branches == k);  // gcd(k,3,5) = 1 always
        CHECK(predict_singularity(a4, k).branches == (k % 2 ? k : 2 * k));
    }
}

TEST_CASE("delta parity holds across families and k") {
    QQ K;
    for (FamilyName name : {FamilyName::c5k, FamilyName::c4k, FamilyName::c2k}) {
        auto fam = make_family(K, name, 1);
        for (const auto& s : fam.base_points)
            for (int k = 1; k <= 10; ++k) {
                auto p = predict_singularity(s, k);
                CHECK((p.mu + p.branches - 1) % 2 == 0);
                CHECK(p.delta == (p.mu + p.branches - 1) / 2);
            }
    }
}

TEST_CASE("prediction error cases") {
    QQ K;
    auto f2 = make_family(K, FamilyName::c2k, 1);
    BaseSingularity<QQ> off;
    off.location = classify_point(K, {K.one(), K.one(), K.one()});
    CHECK_THROWS_AS(predict_singularity(off, 2), TypeTwoPointError);
    auto s = f2.base_points.front();
    s.locally_irreducible = false;
    CHECK_THROWS_AS(predict_singularity(s, 2), NotLocallyIrreducibleError);
}

TEST_CASE("Newton oracle confirms the E8 vertex and its k=3 pullback") {
    QQ K;
    auto c5 = make_family(K, FamilyName::c5k, 1);
    // the base E8 point [0:0:1]: local polygon (0,3)-(5,0), mu = 8
    auto base_local = newton::chart(c5.base, Var::z);
    auto mu_base = newton::newton_number(base_local);
    REQUIRE(mu_base.has_value());
    CHECK(*mu_base == 8);
    // pullback under k=3 at the same vertex: single edge (0,9)-(15,0)
    auto f15 = c5.base.kummer_pullback(3);
    auto local = newton::chart(f15, Var::z);
    auto mu = newton::newton_number(local);
    REQUIRE(mu.has_value());
    CHECK(*mu == 112);
    CHECK(*mu == predict_singularity(point_labeled(c5, "E8"), 3).mu);
    // the A4 vertex has a degenerate polygon in these coordinates; the
    // oracle must refuse rather than return a wrong number
    auto a4_local = newton::chart(c5.base, Var::y);
    CHECK_FALSE(newton::newton_number(a4_local).has_value());
}

TEST_CASE("Newton oracle confirms A_{k-1} pullback points of the conic") {
    QQ K;
    auto c2 = make_family(K, FamilyName::c2k, 1);
    for (int k : {2, 3, 4, 5}) {
        auto fk = c2.base.kummer_pullback(k);
        // the tangency point [0:1:1] is fixed by the cover; chart y = 1,
        // local coordinates (x, z - 1)
        auto local = newton::shift(newton::chart(fk, Var::y), 0, 1);
        auto mu = newton::newton_number(local);
        REQUIRE(mu.has_value());
        CHECK(*mu == k - 1);
    }
}

TEST_CASE("component counts from the monodromy subgroup") {
    // quintic data: {(0,0,1), (3,5,0), (2,0,4)}
    std::vector<std::array<int, 3>> c5{{0, 0, 1}, {3, 5, 0}, {2, 0, 4}};
    for (int k : {1, 3, 5, 7, 9}) CHECK(component_count(c5, k) == 1);
    for (int k : {2, 4, 6, 8, 10}) CHECK(component_count(c5, k) == 2);
    // conic data: {(2,0,0), (0,2,0), (0,0,2)}
    std::vector<std::array<int, 3>> c2{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    for (int k : {1, 3, 5}) CHECK(component_count(c2, k) == 1);
    for (int k : {2, 4, 6}) CHECK(component_count(c2, k) == 4);
    // a puncture pair generating everything
    std::vector<std::array<int, 3>> full{{0, 1, 0}, {0, 0, 1}};
    for (int k : {1, 2, 3, 4, 5, 6, 7}) CHECK(component_count(full, k) == 1);
}

TEST_CASE("component count is invariant under permutation and meridian relation") {
    std::mt19937 rng(31337);
    std::vector<std::array<int, 3>> base{{0, 0, 1}, {3, 5, 0}, {2, 0, 4}};
    for (int k = 1; k <= 8; ++k) {
        int expected = component_count(base, k);
        for (int trial = 0; trial < 5; ++trial) {
            auto mod = base;
            std::shuffle(mod.begin(), mod.end(), rng);
            // a_x + a_y + a_z = 0: adding (1,1,1) to any puncture changes nothing
            auto& p = mod[rng() % mod.size()];
            int shift = static_cast<int>(rng() % 4);
            p = {p[0] + shift, p[1] + shift, p[2] + shift};
            CHECK(component_count(mod, k) == expected);
        }
    }
}

TEST_CASE("genus of the pullbacks by two routes") {
    QQ K;
    auto check_family = [&](FamilyName name) {
        auto fam = make_family(K, name, 1);
        for (int k = 1; k <= 6; ++k) {
            auto g = genus_pullback(fam.base, fam.base_points, fam.base_rational, k);
            if (name == FamilyName::c2k) {
                if (k % 2) {
                    CHECK(g.components == 1);
                    CHECK(g.genus_per_component == (k - 1) * (k - 2) / 2);
                } else {
                    CHECK(g.components == 4);
                    CHECK(g.genus_per_component == (k - 2) * (k - 4) / 8);
                }
            } else {
                if (k % 2) {
                    CHECK(g.components == 1);
                    CHECK(g.genus_per_component == (k - 1) * (k - 2) / 2);
                } else {
                    CHECK(g.components == 2);
                    CHECK(g.genus_per_component == (k - 2) * (k - 2) / 4);
                }
            }
        }
    };
    check_family(FamilyName::c5k);
    check_family(FamilyName::c4k);
    check_family(FamilyName::c2k);
}

TEST_CASE("specific genus values from the statements") {
    QQ K;
    auto c5 = make_family(K, FamilyName::c5k, 1);
    auto g3 = genus_pullback(c5.base, c5.base_points, true, 3);
    CHECK(g3.components == 1);
    CHECK(g3.genus_per_component == 1);
    auto g2 = genus_pullback(c5.base, c5.base_points, true, 2);
    CHECK(g2.components == 2);
    CHECK(g2.genus_per_component == 0);

    auto c2 = make_family(K, FamilyName::c2k, 1);
    auto g5 = genus_pullback(c2.base, c2.base_points, true, 5);
    CHECK(g5.components == 1);
    CHECK(g5.genus_per_component == 6);

    auto c4 = make_family(K, FamilyName::c4k, 1);
    auto g43 = genus_pullback(c4.base, c4.base_points, true, 3);
    CHECK(g43.components == 1);
    CHECK(g43.genus_per_component == 1);
    // the degree-delta ingredients quoted for that case
    auto p1 = predict_singularity(point_labeled(c4, "A2"), 3);
    auto p2 = predict_singularity(point_labeled(c4, "A4"), 3);
    CHECK(p1.mu == 40);
    CHECK(p2.mu == 64);
    CHECK(p1.branches == 3);
    CHECK(p2.branches == 3);
    CHECK(p1.delta == 21);
    CHECK(p2.delta == 33);
}

TEST_CASE("genus routes refuse violated hypotheses") {
    QQ K;
    auto fam = make_family(K, FamilyName::c2k, 1);
    CHECK_THROWS_AS(genus_pullback(fam.base, fam.base_points, false, 2), HypothesisViolatedError);
    auto pts = fam.base_points;
    pts[0].locally_irreducible = false;
    CHECK_THROWS_AS(genus_pullback(fam.base, pts, true, 2), HypothesisViolatedError);
}

TEST_CASE("per-point Tjurina data of the conic pullbacks sums to the global value") {
    QQ K;
    auto fam = make_family(K, FamilyName::c2k, 1);
    for (int k = 1; k <= 5; ++k) {
        long long total = 0;
        for (const auto& s : fam.base_points) {
            auto p = predict_singularity(s, k);
            // A_{k-1} is quasihomogeneous, so tau = mu at each of the
            // preimage points
            total += p.preimage_points * p.mu;
        }
        CHECK(total == 3LL * k * (k - 1));
    }
}
