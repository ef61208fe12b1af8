#include <catch_amalgamated.hpp>

#include <set>

#include "support/helpers.hpp"
#include "tverberg/flip.hpp"
#include "tverberg/partitions.hpp"

using namespace tverberg;
using testsupport::Rng;
using testsupport::stirling2;

namespace {

long count_partitions(int n, int r) {
    PartitionStream ps(n, r);
    long c = 0;
    while (ps.next()) ++c;
    return c;
}

} // namespace

TEST_CASE("partition enumeration counts match the Stirling recurrence") {
    CHECK(count_partitions(3, 3) == 1);
    CHECK(count_partitions(4, 2) == 7);
    CHECK(count_partitions(10, 3) == 9330);
    for (int n = 1; n <= 9; ++n)
        for (int r = 1; r <= n; ++r) CHECK(count_partitions(n, r) == stirling2(n, r));
}

TEST_CASE("partition enumeration is canonical and duplicate-free") {
    PartitionStream ps(5, 3);
    std::set<std::vector<std::vector<int>>> seen;
    while (auto parts = ps.next()) {
        // parts are sorted by least element and internally sorted
        for (std::size_t j = 0; j + 1 < parts->size(); ++j)
            CHECK((*parts)[j][0] < (*parts)[j + 1][0]);
        CHECK(seen.insert(*parts).second);
    }
    CHECK(static_cast<long>(seen.size()) == stirling2(5, 3));
}

TEST_CASE("partition type validates its invariants") {
    auto s = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}});
    CHECK_THROWS_AS(Partition(s, {{0}, {0, 1}}), Error); // reused index
    CHECK_THROWS_AS(Partition(s, {{0}, {}}), Error);     // empty part
    CHECK_THROWS_AS(full_partition(s, {{0}, {1}}), Error); // not covering
    Partition ok(s, {{0, 2}}, {1});
    CHECK(ok.unassigned == std::vector<int>{1});
}

TEST_CASE("is_tverberg_partition on canonical instances") {
    auto line = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}});
    TverbergCheck chk = is_tverberg_partition(Partition(line, {{0, 2}, {1}}));
    REQUIRE(chk);
    CHECK(chk.witness->point == Vec{rat(1)});
    CHECK(chk.witness->verify());

    TverbergCheck none = is_tverberg_partition(Partition(line, {{0}, {1}}, {2}));
    CHECK(!none);
    REQUIRE(none.refutation.has_value());

    auto paper = counterexample_set();
    auto xs = counterexample_triples();
    TverbergCheck pc = is_tverberg_partition(Partition(paper, {xs[0], xs[1]},
                                                       [&] {
                                                           std::vector<int> un;
                                                           std::vector<char> used(10, 0);
                                                           for (int i : xs[0]) used[i] = 1;
                                                           for (int i : xs[1]) used[i] = 1;
                                                           for (int i = 0; i < 10; ++i)
                                                               if (!used[i]) un.push_back(i);
                                                           return un;
                                                       }()));
    REQUIRE(pc);
    CHECK(pc.witness->point == Vec(5, Rat(0)));
}

TEST_CASE("tverberg_exists on Radon-sized instances") {
    Rng rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = rng.point_set(4, 2);
        TverbergSearch res = tverberg_exists(s, 2);
        REQUIRE(res.witness.has_value()); // Radon: d+2 points always split
        CHECK(res.witness->verify());
    }
    // 7 points in the plane always admit a 3-partition
    for (int trial = 0; trial < 3; ++trial) {
        auto s = rng.point_set(7, 2);
        TverbergSearch res = tverberg_exists(s, 3);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->verify());
    }
    // 3 distinct points never admit a 3-partition
    auto tiny = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}});
    TverbergSearch none = tverberg_exists(tiny, 3);
    CHECK(!none.witness);
    CHECK(none.refuted_certified == 1);
}

TEST_CASE("search results are identical across thread counts") {
    Rng rng(4242);
    auto s = rng.point_set(6, 2);
    TverbergSearch serial = tverberg_exists(s, 2, {}, 1);
    TverbergSearch parallel = tverberg_exists(s, 2, {}, 4);
    REQUIRE(serial.witness.has_value() == parallel.witness.has_value());
    if (serial.witness) {
        CHECK(serial.witness->partition.parts == parallel.witness->partition.parts);
        CHECK(serial.witness->point == parallel.witness->point);
    }
}

TEST_CASE("downward monotonicity: an r-partition implies an (r-1)-partition") {
    Rng rng(90);
    for (int trial = 0; trial < 8; ++trial) {
        int n = rng.uniform(5, 7);
        auto s = rng.point_set(n, 2);
        for (int r = 3; r >= 2; --r) {
            if (tverberg_exists(s, r).witness.has_value())
                CHECK(tverberg_exists(s, r - 1).witness.has_value());
        }
    }
}

TEST_CASE("affine invariance of the Tverberg property") {
    Rng rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        auto s = rng.point_set(5, 2);
        auto [m, b] = rng.affine_map(2);
        auto ms = testsupport::apply_affine(*s, m, b);
        TverbergSearch a = tverberg_exists(s, 2);
        TverbergSearch t = tverberg_exists(ms, 2);
        CHECK(a.witness.has_value() == t.witness.has_value());
        if (a.witness) {
            // the mapped witness point must witness the same partition on M(S)
            Partition moved(ms, a.witness->partition.parts, a.witness->partition.unassigned);
            TverbergWitness w{moved, testsupport::apply_affine_point(a.witness->point, m, b),
                              a.witness->coefficients};
            CHECK(w.verify());
        }
    }
}

TEST_CASE("tolerant partitions") {
    auto line3 = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}});
    Partition p(line3, {{0, 2}, {1}});
    CHECK(is_tolerant_partition(p, 0)); // t = 0 is the plain Tverberg check
    CHECK(!is_tolerant_partition(p, 1)); // deleting index 1 empties part 2

    auto line6 = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}, {rat(3)}, {rat(4)}, {rat(5)}});
    // alternating parts survive every single deletion (brute-forced below)
    Partition alt(line6, {{0, 2, 4}, {1, 3, 5}});
    CHECK(is_tolerant_partition(alt, 1));

    auto line4 = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}, {rat(3)}});
    Partition outer(line4, {{0, 3}, {1, 2}});
    CHECK(is_tolerant_partition(outer, 0));
    CHECK(!is_tolerant_partition(outer, 1)); // deleting index 3 leaves [0,0] vs [1,2]
}

TEST_CASE("tolerance agrees with a 1-D brute-force oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        auto s = rng.sorted_line_set(rng.uniform(4, 6));
        // random 2-partition covering everything
        std::vector<std::vector<int>> parts(2);
        for (int i = 0; i < s->size(); ++i) parts[rng.uniform(0, 1)].push_back(i);
        if (parts[0].empty() || parts[1].empty()) continue;
        Partition p(s, parts);
        for (int t = 0; t <= 1; ++t) {
            bool oracle = true;
            CombinationStream del(s->size(), t);
            while (auto sub = del.next()) {
                std::vector<char> deleted(s->size(), 0);
                for (int i : *sub) deleted[i] = 1;
                std::vector<std::vector<int>> rem;
                bool emptied = false;
                for (const auto& part : parts) {
                    std::vector<int> keep;
                    for (int i : part)
                        if (!deleted[i]) keep.push_back(i);
                    if (keep.empty()) emptied = true;
                    rem.push_back(std::move(keep));
                }
                if (emptied || !testsupport::parts_intersect_1d(*s, rem)) {
                    oracle = false;
                    break;
                }
            }
            CHECK(is_tolerant_partition(p, t) == oracle);
        }
    }
}

TEST_CASE("radon_from_dependence normalizes and certifies") {
    auto line = make_point_set(1, {{rat(0)}, {rat(1)}, {rat(2)}});
    RadonPair rp = radon_from_dependence(*line, {rat(1), rat(-2), rat(1)});
    CHECK(rp.a == std::vector<int>{0, 2});
    CHECK(rp.b == std::vector<int>{1});
    CHECK(rp.point == Vec{rat(1)});
    CHECK(rp.normalized == Vec{rat(1, 2), rat(-1), rat(1, 2)});

    RadonPair neg = radon_from_dependence(*line, {rat(-1), rat(2), rat(-1)});
    CHECK(neg.a == rp.b);
    CHECK(neg.b == rp.a);
    CHECK(neg.point == rp.point); // Phi(alpha) = Phi(-alpha)

    auto cross = make_point_set(
        2, {{rat(1), rat(0)}, {rat(-1), rat(0)}, {rat(0), rat(1)}, {rat(0), rat(-1)}, {rat(0), rat(0)}});
    RadonPair cr = radon_from_dependence(*cross, {rat(1), rat(1), rat(0), rat(0), rat(-2)});
    CHECK(cr.a == std::vector<int>{0, 1});
    CHECK(cr.b == std::vector<int>{4});
    CHECK(cr.point == Vec{rat(0), rat(0)});

    CHECK_THROWS_AS(radon_from_dependence(*line, {rat(1), rat(0), rat(0)}), NotADependence);
    CHECK_THROWS_AS(radon_from_dependence(*line, {rat(0), rat(0), rat(0)}), NotADependence);
}

TEST_CASE("negation symmetry holds for every basis dependence of random sets") {
    Rng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = rng.point_set(rng.uniform(4, 6), 2);
        for (const Vec& alpha : dependence_space(s).basis) {
            RadonPair rp = radon_from_dependence(*s, alpha);
            Vec neg(alpha.size());
            for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
            RadonPair rn = radon_from_dependence(*s, neg);
            CHECK(rp.a == rn.b);
            CHECK(rp.b == rn.a);
            CHECK(rp.point == rn.point);
            // the Radon point really lies in both hulls
            CHECK(static_cast<bool>(lp::in_convex_hull(rp.point, *s, rp.a)));
            CHECK(static_cast<bool>(lp::in_convex_hull(rp.point, *s, rp.b)));
        }
    }
}
