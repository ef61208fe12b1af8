#include <catch_amalgamated.hpp>

#include "support/helpers.hpp"
#include "tverberg/matrix.hpp"
#include "tverberg/point_set.hpp"

using namespace tverberg;
using testsupport::Rng;

TEST_CASE("rationals parse and stay canonical") {
    CHECK(rat_str(rat(2, 4)) == "1/2");
    CHECK(rat_str(rat(-6, 3)) == "-2");
    CHECK(*parse_rat("3/4") == rat(3, 4));
    CHECK(*parse_rat("-12") == rat(-12));
    CHECK(*parse_rat("6/4") == rat(3, 2));
    CHECK(!parse_rat("1.5"));
    CHECK(!parse_rat("1e3"));
    CHECK(!parse_rat("x"));
    CHECK(!parse_rat("1/0"));
    CHECK(!parse_rat(""));
    // denominator normalization: GMP keeps den > 0 and lowest terms
    Rat r = *parse_rat("2/6");
    CHECK(r.get_num() == 1);
    CHECK(r.get_den() == 3);
}

TEST_CASE("rref identity and zero cases") {
    Mat id = Mat::identity(2);
    RrefResult rr = rref(id);
    CHECK(rr.matrix == id);
    CHECK(rr.pivots == std::vector<int>{0, 1});

    Mat z(2, 3);
    RrefResult rz = rref(z);
    CHECK(rz.matrix == z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref of a rank-1 matrix") {
    Mat m = Mat::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
    RrefResult rr = rref(m);
    CHECK(rr.matrix == Mat::from_rows({{rat(1), rat(2)}, {rat(0), rat(0)}}));
    CHECK(rr.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
    Rng rng(20260810);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational();
        Mat once = rref(m).matrix;
        CHECK(rref(once).matrix == once);
    }
}

TEST_CASE("kernel basis spans the kernel exactly") {
    CHECK(kernel_basis(Mat::identity(3)).empty());

    // L for S = {0,1,2} on the line: rows (0,1,2) and (1,1,1)
    Mat L = Mat::from_rows({{rat(0), rat(1), rat(2)}, {rat(1), rat(1), rat(1)}});
    auto basis = kernel_basis(L);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Vec{rat(1), rat(-2), rat(1)});

    Mat row = Mat::from_rows({{rat(1), rat(1)}});
    auto b2 = kernel_basis(row);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0][0] == -b2[0][1]); // spans (1,-1)
}

TEST_CASE("kernel vectors satisfy m v = 0 on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.uniform(1, 4), cols = rng.uniform(1, 6);
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational();
        auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == cols - rank(m));
        for (const Vec& v : basis) CHECK(is_zero(m.apply(v)));
        if (!basis.empty()) CHECK(span_rank(basis) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("point sets reject duplicates and bad shapes") {
    CHECK_THROWS_AS(PointSet(2, {{rat(1), rat(0)}, {rat(1), rat(0)}}), Error);
    CHECK_THROWS_AS(PointSet(2, {{rat(1)}}), Error);
    CHECK_NOTHROW(PointSet(1, {{rat(1)}, {rat(2)}}));
}

TEST_CASE("affine span dimensions") {
    CHECK(affine_span_dim(*make_point_set(3, {{rat(1), rat(2), rat(3)}})) == 0);
    CHECK(affine_span_dim(*make_point_set(2, {{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}})) ==
          1);
    auto cross = make_point_set(
        2, {{rat(1), rat(0)}, {rat(-1), rat(0)}, {rat(0), rat(1)}, {rat(0), rat(-1)}, {rat(0), rat(0)}});
    CHECK(affine_span_dim(*cross) == 2);
}

TEST_CASE("dependence space of canonical sets") {
    auto simplex = make_point_set(2, {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}});
    CHECK(dependence_space(simplex).basis.empty());

    auto line = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}});
    auto ds = dependence_space(line);
    REQUIRE(ds.dim() == 1);
    CHECK(ds.basis[0] == Vec{rat(1), rat(-2), rat(1)});

    auto cross = make_point_set(
        2, {{rat(1), rat(0)}, {rat(-1), rat(0)}, {rat(0), rat(1)}, {rat(0), rat(-1)}, {rat(0), rat(0)}});
    auto dc = dependence_space(cross);
    REQUIRE(dc.dim() == 2);
    // the two hand-computed dependences lie in the span of the basis
    std::vector<Vec> ext = dc.basis;
    ext.push_back({rat(1), rat(1), rat(0), rat(0), rat(-2)});
    CHECK(span_rank(ext) == 2);
    ext.push_back({rat(0), rat(0), rat(1), rat(1), rat(-2)});
    CHECK(span_rank(ext) == 2);
}

TEST_CASE("dependence space invariants on random sets") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = rng.uniform(1, 3);
        int n = rng.uniform(1, dim + 4);
        auto s = rng.point_set(n, dim);
        auto ds = dependence_space(s);
        CHECK(ds.dim() == s->size() - 1 - affine_span_dim(*s));
        for (const Vec& alpha : ds.basis) {
            CHECK(is_dependence(*s, alpha));
        }
        if (!ds.basis.empty()) CHECK(span_rank(ds.basis) == ds.dim());
    }
}
