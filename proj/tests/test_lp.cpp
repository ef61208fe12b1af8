#include <catch_amalgamated.hpp>

#include "support/helpers.hpp"
#include "tverberg/lp.hpp"

using namespace tverberg;
using testsupport::Rng;

namespace {

lp::LinearSystem random_system(Rng& rng) {
    int vars = rng.uniform(1, 5);
    lp::LinearSystem sys(vars);
    for (int j = 0; j < vars; ++j) sys.nonneg[j] = rng.uniform(0, 1) == 1;
    int rows = rng.uniform(1, 5);
    for (int i = 0; i < rows; ++i) {
        Vec row(vars);
        for (int j = 0; j < vars; ++j) row[j] = rng.rational(4, 3);
        sys.add_row(std::move(row), rng.rational(4, 3));
    }
    return sys;
}

} // namespace

TEST_CASE("feasibility basics with certificates") {
    // {x >= 0, x = 1}
    lp::LinearSystem sys(1, true);
    sys.add_row({rat(1)}, rat(1));
    lp::Verdict v = lp::solve_feasibility(sys);
    REQUIRE(v.is_feasible());
    CHECK(v.witness().assignment == Vec{rat(1)});
    CHECK(lp::verify_certificate(sys, v));

    // {x >= 0, x = -1}
    lp::LinearSystem bad(1, true);
    bad.add_row({rat(1)}, rat(-1));
    lp::Verdict w = lp::solve_feasibility(bad);
    REQUIRE(!w.is_feasible());
    CHECK(lp::verify_certificate(bad, w));
}

TEST_CASE("verify_certificate rejects wrong witnesses") {
    lp::LinearSystem sys(1, true);
    sys.add_row({rat(1)}, rat(1));
    lp::Verdict fake = lp::Verdict::feasible(lp::FeasWitness{{rat(2)}});
    CHECK(!lp::verify_certificate(sys, fake));
    lp::Verdict negative = lp::Verdict::feasible(lp::FeasWitness{{rat(-1)}});
    CHECK(!lp::verify_certificate(sys, negative));
}

TEST_CASE("barycentric system for the five-dimensional triple") {
    // 0 in conv{e_1, e_3, f_1} with f_1 = -e_1 - e_3: coefficients (1/3,1/3,1/3)
    auto s = make_point_set(5, {{rat(1), rat(0), rat(0), rat(0), rat(0)},
                                {rat(0), rat(0), rat(1), rat(0), rat(0)},
                                {rat(-1), rat(0), rat(-1), rat(0), rat(0)}});
    Vec origin(5, Rat(0));
    lp::Verdict v = lp::in_convex_hull(origin, *s, {0, 1, 2});
    REQUIRE(v.is_feasible());
    CHECK(v.witness().assignment == Vec{rat(1, 3), rat(1, 3), rat(1, 3)});
}

TEST_CASE("convex hull membership basics") {
    auto s = make_point_set(2, {{rat(0), rat(0)}, {rat(2), rat(0)}, {rat(1), rat(0)}});
    lp::Verdict mid = lp::in_convex_hull({rat(1), rat(0)}, *s, {0, 1});
    REQUIRE(mid.is_feasible());
    CHECK(mid.witness().assignment == Vec{rat(1, 2), rat(1, 2)});

    auto axes = make_point_set(2, {{rat(1), rat(0)}, {rat(0), rat(1)}});
    lp::Verdict out = lp::in_convex_hull({rat(0), rat(0)}, *axes, {0, 1});
    CHECK(!out.is_feasible());

    CHECK_THROWS_AS(lp::in_convex_hull({rat(0), rat(0)}, *axes, {}), EmptyIndexSet);
}

TEST_CASE("membership agrees with the 1-D interval oracle") {
    Rng rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = rng.point_set(rng.uniform(1, 6), 1);
        std::vector<int> idx;
        for (int i = 0; i < s->size(); ++i)
            if (rng.uniform(0, 1) || idx.empty()) idx.push_back(i);
        Vec p = {rng.rational(10, 3)};
        auto [lo, hi] = testsupport::hull_interval(*s, idx);
        bool expect = lo <= p[0] && p[0] <= hi;
        CHECK(static_cast<bool>(lp::in_convex_hull(p, *s, idx)) == expect);
    }
}

TEST_CASE("random systems round-trip through certificates") {
    Rng rng(31337);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        lp::LinearSystem sys = random_system(rng);
        lp::Verdict v = lp::solve_feasibility(sys);
        CHECK(lp::verify_certificate(sys, v));
        (v.is_feasible() ? feasible : infeasible)++;
    }
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
}

TEST_CASE("determinism: identical inputs give identical verdicts") {
    Rng rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        lp::LinearSystem sys = random_system(rng);
        lp::Verdict a = lp::solve_feasibility(sys);
        lp::Verdict b = lp::solve_feasibility(sys);
        REQUIRE(a.is_feasible() == b.is_feasible());
        if (a.is_feasible())
            CHECK(a.witness().assignment == b.witness().assignment);
        else
            CHECK(a.cert().multipliers == b.cert().multipliers);
    }
}

TEST_CASE("maximize finds exact optima and rays") {
    // max x + y over the triangle x,y >= 0, x + y <= 1 written as x + y + s = 1
    lp::LinearSystem sys(3, true);
    sys.add_row({rat(1), rat(1), rat(1)}, rat(1));
    lp::OptResult res = lp::maximize(sys, {rat(1), rat(1), rat(0)});
    REQUIRE(res.status == lp::OptStatus::Optimal);
    CHECK(res.value == rat(1));

    // unbounded: free variable, no constraints binding it upward
    lp::LinearSystem unb(2);
    unb.nonneg[1] = true;
    unb.add_row({rat(0), rat(1)}, rat(3));
    lp::OptResult ray = lp::maximize(unb, {rat(1), rat(0)});
    CHECK(ray.status == lp::OptStatus::Unbounded);

    // infeasible
    lp::LinearSystem inf(1, true);
    inf.add_row({rat(1)}, rat(-2));
    lp::OptResult bad = lp::maximize(inf, {rat(1)});
    CHECK(bad.status == lp::OptStatus::Infeasible);
    REQUIRE(bad.cert.has_value());
    CHECK(lp::verify_certificate(inf, lp::Verdict::infeasible(*bad.cert)));
}

TEST_CASE("hull intersection via row generation matches the joint system") {
    Rng rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        auto s = rng.point_set(rng.uniform(3, 7), rng.uniform(1, 2));
        int nh = rng.uniform(1, 3);
        std::vector<std::vector<int>> hulls;
        for (int h = 0; h < nh; ++h) {
            std::vector<int> idx;
            for (int i = 0; i < s->size(); ++i)
                if (rng.uniform(0, 1) || idx.empty()) idx.push_back(i);
            hulls.push_back(std::move(idx));
        }
        lp::HullIntersection hi = lp::intersect_hulls(*s, hulls);
        lp::LinearSystem joint = lp::hull_intersection_system(*s, hulls);
        lp::Verdict direct = lp::solve_feasibility(joint);
        CHECK(hi.feasible() == direct.is_feasible());
        if (hi.feasible()) {
            // assemble the joint assignment from the row-generated pieces
            Vec x(*hi.point);
            for (std::size_t h = 0; h < hulls.size(); ++h)
                x.insert(x.end(), hi.coeffs[h].begin(), hi.coeffs[h].end());
            CHECK(lp::verify_certificate(joint, lp::Verdict::feasible(lp::FeasWitness{x})));
        } else {
            CHECK(lp::verify_hull_infeasibility(*s, hulls, *hi.cert));
            CHECK(lp::verify_certificate(joint, lp::Verdict::infeasible(*hi.cert)));
        }
    }
}
