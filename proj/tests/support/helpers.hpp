#pragma once

// Shared test oracles and generators. Everything here is deliberately
// independent of the library's computation paths: Stirling counts come from
// the textbook recurrence, 1-D geometry from direct interval arithmetic,
// and expected values are frozen from these oracles.

#include <algorithm>
#include <random>
#include <vector>

#include "tverberg/matrix.hpp"
#include "tverberg/point_set.hpp"
#include "tverberg/rational.hpp"

namespace testsupport {

using tverberg::PointSet;
using tverberg::PointSetPtr;
using tverberg::Rat;
using tverberg::Vec;

/// Stirling numbers of the second kind via S(n,r) = r S(n-1,r) + S(n-1,r-1).
inline long long stirling2(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (n == 0) return r == 0 ? 1 : 0;
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(r + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, r); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][r];
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}

    int uniform(int lo, int hi) { // inclusive
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen);
    }

    Rat rational(int num_range = 8, int max_den = 4) {
        int den = uniform(1, max_den);
        int num = uniform(-num_range, num_range);
        return tverberg::rat(num, den);
    }

    Vec point(int dim, int num_range = 8, int max_den = 4) {
        Vec p;
        for (int c = 0; c < dim; ++c) p.push_back(rational(num_range, max_den));
        return p;
    }

    /// n pairwise distinct random rational points in R^dim.
    PointSetPtr point_set(int n, int dim, int num_range = 8, int max_den = 4) {
        std::vector<Vec> pts;
        while (static_cast<int>(pts.size()) < n) {
            Vec p = point(dim, num_range, max_den);
            bool dup = false;
            for (const Vec& q : pts)
                if (q == p) dup = true;
            if (!dup) pts.push_back(std::move(p));
        }
        return tverberg::make_point_set(dim, std::move(pts));
    }

    /// Sorted distinct rationals on the line.
    PointSetPtr sorted_line_set(int n, int num_range = 12, int max_den = 4) {
        std::vector<Rat> xs;
        while (static_cast<int>(xs.size()) < n) {
            Rat x = rational(num_range, max_den);
            bool dup = false;
            for (const Rat& q : xs)
                if (q == x) dup = true;
            if (!dup) xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end());
        std::vector<Vec> pts;
        for (Rat& x : xs) pts.push_back({x});
        return tverberg::make_point_set(1, std::move(pts));
    }

    /// Invertible rational affine map x -> M x + b (det M != 0 by retry).
    std::pair<tverberg::Mat, Vec> affine_map(int dim) {
        for (;;) {
            tverberg::Mat m(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) m.at(i, j) = rational(3, 2);
            if (tverberg::rank(m) == dim) {
                Vec b = point(dim, 5, 3);
                return {m, b};
            }
        }
    }
};

inline PointSetPtr apply_affine(const PointSet& s, const tverberg::Mat& m, const Vec& b) {
    std::vector<Vec> pts;
    for (int i = 0; i < s.size(); ++i) {
        Vec y = m.apply(s.point(i));
        for (int c = 0; c < s.dim(); ++c) y[c] += b[c];
        pts.push_back(std::move(y));
    }
    return tverberg::make_point_set(s.dim(), std::move(pts));
}

inline Vec apply_affine_point(const Vec& p, const tverberg::Mat& m, const Vec& b) {
    Vec y = m.apply(p);
    for (std::size_t c = 0; c < y.size(); ++c) y[c] += b[c];
    return y;
}

/// 1-D oracle: hull of an index set is [min coord, max coord].
inline std::pair<Rat, Rat> hull_interval(const PointSet& s, const std::vector<int>& idx) {
    Rat lo = s.point(idx[0])[0], hi = lo;
    for (int i : idx) {
        const Rat& x = s.point(i)[0];
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    return {lo, hi};
}

/// 1-D oracle: do the parts' hull intervals share a point?
inline bool parts_intersect_1d(const PointSet& s, const std::vector<std::vector<int>>& parts) {
    Rat lo = hull_interval(s, parts[0]).first, hi = hull_interval(s, parts[0]).second;
    for (const auto& part : parts) {
        auto [l, h] = hull_interval(s, part);
        if (l > lo) lo = l;
        if (h < hi) hi = h;
    }
    return lo <= hi;
}

using Interval = std::pair<Rat, Rat>;

/// 1-D oracle: merged interval union of a list of (lo, hi) cells.
inline std::vector<Interval> merge_intervals(std::vector<Interval> ivals) {
    std::sort(ivals.begin(), ivals.end());
    std::vector<Interval> out;
    for (auto& iv : ivals) {
        if (iv.first > iv.second) continue;
        if (!out.empty() && iv.first <= out.back().second)
            out.back().second = std::max(out.back().second, iv.second);
        else
            out.push_back(iv);
    }
    return out;
}

} // namespace testsupport
