#include <catch_amalgamated.hpp>

#include "support/helpers.hpp"
#include "tverberg/flip.hpp"
#include "tverberg/gallery.hpp"
#include "tverberg/regions.hpp"

using namespace tverberg;
using testsupport::Interval;
using testsupport::Rng;

namespace {

/// Test-side oracle: exact interval union of a 1-D region (cell endpoints
/// are hull coordinate extremes; no LP involved).
std::vector<Interval> region_intervals(const Region& reg) {
    std::vector<Interval> ivals;
    for (const ConvexCell& c : reg.cells) {
        bool first = true;
        Rat lo, hi;
        for (const auto& h : c.hulls) {
            auto [l, u] = testsupport::hull_interval(*reg.ground, h);
            if (first || l > lo) lo = l;
            if (first || u < hi) hi = u;
            first = false;
        }
        ivals.push_back({lo, hi});
    }
    return testsupport::merge_intervals(std::move(ivals));
}

PointSetPtr line(std::initializer_list<int> xs) {
    std::vector<Vec> pts;
    for (int x : xs) pts.push_back({rat(x)});
    return make_point_set(1, std::move(pts));
}

} // namespace

TEST_CASE("cell feasibility basics") {
    auto s = line({0, 1, 2});
    CHECK(cell_feasible(ConvexCell::make(s, {{0}, {0}})).feasible());
    CHECK(!cell_feasible(ConvexCell::make(s, {{0}, {1}})).feasible());
    CHECK(*cell_feasible(ConvexCell::make(s, {{0}, {0}})).point == Vec{rat(0)});

    auto paper = counterexample_set();
    auto xs = counterexample_triples();
    CellStatus st = cell_feasible(ConvexCell::make(paper, {xs[0], xs[1]}));
    REQUIRE(st.feasible());
    CHECK(*st.point == Vec(5, Rat(0)));
}

TEST_CASE("cell canonicalization drops implied hulls") {
    auto s = line({0, 1, 2});
    ConvexCell c = ConvexCell::make(s, {{0, 1, 2}, {0, 1}, {0, 1}});
    CHECK(c.hulls == std::vector<std::vector<int>>{{0, 1}});
    CHECK_THROWS_AS(ConvexCell::make(s, {{}}), EmptyIndexSet);
}

TEST_CASE("cell dimension by affine-hull probing") {
    auto s = line({0, 1, 2});
    CHECK(cell_dim(ConvexCell::make(s, {{0}, {1}})) == -1); // empty
    CHECK(cell_dim(ConvexCell::make(s, {{0, 1}, {1, 2}})) == 0); // [0,1] meets [1,2] at 1
    CHECK(cell_dim(ConvexCell::make(s, {{0, 2}, {1, 2}})) == 1);

    auto quad = make_point_set(2, {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)}});
    CHECK(cell_dim(ConvexCell::make(quad, {{0, 1, 2, 3}})) == 2);
}

TEST_CASE("tverberg_region basics") {
    auto s = line({0, 1, 2, 3});
    Region t1 = tverberg_region(s, 1);
    REQUIRE(t1.cells.size() == 1); // conv(S)
    CHECK(region_intervals(t1) == std::vector<Interval>{{rat(0), rat(3)}});

    Region t2 = tverberg_region(s, 2);
    CHECK(t2.candidates_examined == 7);
    CHECK(region_intervals(t2) == std::vector<Interval>{{rat(1), rat(2)}});
    CHECK(region_dim(t2) == 1);

    Region t3 = tverberg_region(s, 3);
    CHECK(t3.cells.empty());
    CHECK(region_dim(t3) == -1);
    CHECK(t3.refuted_certified == t3.candidates_examined);
}

TEST_CASE("region construction is identical across thread counts") {
    auto s = gallery::cross_set();
    Region serial = tverberg_region(s, 2, {}, 1);
    Region parallel = tverberg_region(s, 2, {}, 3);
    REQUIRE(serial.cells.size() == parallel.cells.size());
    for (std::size_t i = 0; i < serial.cells.size(); ++i)
        CHECK(serial.cells[i].hulls == parallel.cells[i].hulls);
}

TEST_CASE("cross set region dims") {
    auto cross = gallery::cross_set();
    CHECK(region_dim(tverberg_region(cross, 1)) == 2);
    CHECK(region_dim(tverberg_region(cross, 2)) == 0);
    CHECK(region_dim(tverberg_region(cross, 3)) == 0);
    CHECK(region_dim(tverberg_region(cross, 4)) == -1);
}

TEST_CASE("region membership") {
    auto s = line({0, 1, 2, 3});
    Region t2 = tverberg_region(s, 2);
    CHECK(region_contains(t2, {rat(1)}));
    CHECK(region_contains(t2, {rat(3, 2)}));
    CHECK(!region_contains(t2, {rat(0)}));
    CHECK(!region_contains(t2, {rat(5)}));
    for (const ConvexCell& c : t2.cells)
        CHECK(region_contains(t2, *cell_feasible(c).point)); // witness round-trip

    auto paper = counterexample_set();
    Region pt2 = tverberg_region(paper, 2);
    CHECK(region_contains(pt2, Vec(5, Rat(0))));
}

TEST_CASE("region intersection") {
    auto s = line({1, 2, 3});
    Region a = tverberg_region(s, 1, {0, 1}); // [1,2]
    Region b = tverberg_region(s, 1, {1, 2}); // [2,3]
    Region both = region_intersect(a, b);
    CHECK(region_intervals(both) == std::vector<Interval>{{rat(2), rat(2)}});

    Region empty;
    empty.ground = s;
    CHECK(region_intersect(a, empty).cells.empty());

    Region self = region_intersect(a, a);
    // idempotent as a point set: sampled membership agrees
    for (const Rat& q : {rat(1), rat(3, 2), rat(2), rat(5, 2)})
        CHECK(region_contains(self, {q}) == region_contains(a, {q}));
}

TEST_CASE("core regions on the line") {
    auto s6 = line({0, 1, 2, 3, 4, 5});
    Region core = core_region(s6, 2, 1);
    CHECK(region_intervals(core) == std::vector<Interval>{{rat(2), rat(3)}});
    CHECK(region_dim(core) == 1);

    auto s4 = line({0, 1, 2, 3});
    Region empty = core_region(s4, 2, 1);
    CHECK(empty.cells.empty()); // n = 3 < 2(r-1)+2t = 4

    Region t0 = core_region(s4, 2, 0);
    CHECK(region_intervals(t0) == region_intervals(tverberg_region(s4, 2)));

    CHECK_THROWS_AS(core_region(s6, 2, 1, /*cell_budget=*/3), SearchExhausted);
}

TEST_CASE("core membership without region construction") {
    auto s6 = line({0, 1, 2, 3, 4, 5});
    CHECK(core_member({rat(2)}, s6, 2, 1));
    CHECK(core_member({rat(5, 2)}, s6, 2, 1));
    CHECK(core_member({rat(3)}, s6, 2, 1));
    CHECK(!core_member({rat(3, 2)}, s6, 2, 1));
    CHECK(!core_member({rat(7, 2)}, s6, 2, 1));

    // a hull vertex dies under its own deletion
    auto quad = make_point_set(2, {{rat(0), rat(0)}, {rat(2), rat(0)}, {rat(0), rat(2)}, {rat(2), rat(2)}});
    CHECK(!core_member({rat(0), rat(0)}, quad, 2, 1));

    auto paper = counterexample_set();
    CHECK(core_member(Vec(5, Rat(0)), paper, 2, 1));
}

TEST_CASE("core_member agrees with core_region membership") {
    Rng rng(606);
    for (int trial = 0; trial < 6; ++trial) {
        auto s = rng.sorted_line_set(5);
        Region core = core_region(s, 2, 1);
        for (int probe = 0; probe < 10; ++probe) {
            Vec p = {rng.rational(12, 3)};
            CHECK(core_member(p, s, 2, 1) == region_contains(core, p));
        }
    }
}

TEST_CASE("containment chain: T_{r+t} inside the core inside T_r") {
    Rng rng(7117);
    for (int trial = 0; trial < 4; ++trial) {
        auto s = rng.point_set(6, 2, 4, 2);
        Region t2 = tverberg_region(s, 2);
        Region t3 = tverberg_region(s, 3);
        std::vector<Vec> probes;
        for (int k = 0; k < 12; ++k) probes.push_back(rng.point(2, 4, 2));
        for (const ConvexCell& c : t3.cells) probes.push_back(*cell_feasible(c).point);
        for (const Vec& p : probes) {
            if (region_contains(t3, p)) CHECK(core_member(p, s, 2, 1));
            if (core_member(p, s, 2, 1)) CHECK(region_contains(t2, p));
        }
    }
}

TEST_CASE("monotonicity: T_{r+1} within T_r under sampled membership") {
    Rng rng(515);
    auto s = rng.point_set(7, 2, 4, 2);
    Region t2 = tverberg_region(s, 2);
    Region t3 = tverberg_region(s, 3);
    for (const ConvexCell& c : t3.cells) {
        Vec p = *cell_feasible(c).point;
        CHECK(region_contains(t2, p));
    }
}

TEST_CASE("affine invariance of region membership") {
    Rng rng(321);
    auto s = rng.point_set(5, 2, 3, 2);
    auto [m, b] = rng.affine_map(2);
    auto ms = testsupport::apply_affine(*s, m, b);
    Region r2 = tverberg_region(s, 2);
    Region mr2 = tverberg_region(ms, 2);
    for (int k = 0; k < 15; ++k) {
        Vec p = rng.point(2, 4, 2);
        CHECK(region_contains(r2, p) ==
              region_contains(mr2, testsupport::apply_affine_point(p, m, b)));
    }
}

TEST_CASE("interval formulas hold for short lines") {
    Rng rng(888);
    for (int m = 2; m <= 6; ++m) {
        auto s = rng.sorted_line_set(m);
        std::vector<Rat> xs;
        for (int i = 0; i < m; ++i) xs.push_back(s->point(i)[0]);
        for (int r = 1; r <= m; ++r) {
            auto ivals = region_intervals(tverberg_region(s, r));
            if (m >= 2 * r - 1) {
                REQUIRE(ivals.size() == 1);
                CHECK(ivals[0] == Interval{xs[r - 1], xs[m - r]});
            } else {
                CHECK(ivals.empty());
            }
        }
    }
}

TEST_CASE("cascade sums") {
    auto single = make_point_set(2, {{rat(3), rat(4)}});
    CascadeSums one = cascade_sum(single);
    CHECK(one.dims == std::vector<int>{0});
    CHECK(one.sum == 0);

    CascadeSums cross = cascade_sum(gallery::cross_set());
    CHECK(cross.dims == std::vector<int>{2, 0, 0, -1, -1});
    CHECK(cross.sum == 0);

    CascadeSums line4 = cascade_sum(line({0, 1, 2, 3}));
    CHECK(line4.dims == std::vector<int>{1, 1, -1, -1});
    CHECK(line4.sum == 0);
}
