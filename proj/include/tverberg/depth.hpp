#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tverberg/combinatorics.hpp"
#include "tverberg/regions.hpp"

namespace tverberg {

/// Closed halfspace {x : normal . x >= offset}.
struct Halfspace {
    Vec normal;
    Rat offset;
};

struct DepthReport {
    Vec point;
    int depth = 0;
    Halfspace witness; // passes through `point` and meets exactly `depth` set points
};

namespace detail {

inline int halfspace_count(const std::vector<Vec>& v, const Vec& c) {
    int cnt = 0;
    for (const Vec& x : v)
        if (sgn(dot(c, x)) >= 0) ++cnt;
    return cnt;
}

/// Smallest-terms epsilon such that base + eps * bump keeps the strict sign
/// of base . x for every x with base . x != 0.
inline Rat sign_preserving_eps(const std::vector<Vec>& v, const Vec& base, const Vec& bump) {
    Rat eps = 1;
    for (const Vec& x : v) {
        Rat bx = dot(base, x);
        if (sgn(bx) == 0) continue;
        Rat px = dot(bump, x);
        Rat bound = abs(bx) / (2 * (abs(px) + 1));
        if (bound < eps) eps = bound;
    }
    return eps;
}

inline Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace detail

/// Exact Tukey depth: the minimum over closed halfspaces containing p of the
/// number of set points in the halfspace. Implemented for d <= 3 by scanning
/// a finite candidate family of halfspace normals that provably meets every
/// full-dimensional cell of the dual hyperplane arrangement {c : c.(x_i-p)=0};
/// boundary candidates only ever overcount, so the minimum is exact. Each
/// candidate is materialized as an actual rational normal (perturbation with
/// an explicit epsilon) and counted directly.
inline DepthReport tukey_depth(const Vec& p, const PointSet& s) {
    const int d = s.dim();
    if (d > 3) throw DimensionTooLarge("exact Tukey depth is implemented for dimension at most 3");
    if (static_cast<int>(p.size()) != d) throw Error("query point has wrong dimension");
    std::vector<Vec> v;
    for (int i = 0; i < s.size(); ++i) v.push_back(s.point(i) - p);

    std::vector<Vec> candidates;
    auto push = [&](Vec c) {
        if (!is_zero(c)) candidates.push_back(std::move(c));
    };
    if (d == 1) {
        push({Rat(1)});
        push({Rat(-1)});
    } else if (d == 2) {
        for (const Vec& x : v) {
            if (is_zero(x)) continue;
            push(x);
            push(Rat(-1) * x);
            Vec perp = {-x[1], x[0]};
            Vec nperp = {x[1], -x[0]};
            // Both adjacent dual sectors of the boundary ray c.x = 0.
            for (const Vec& g1 : {perp, nperp}) {
                push(g1);
                for (const Vec& g2 : {x, Rat(-1) * x}) {
                    Rat eps = detail::sign_preserving_eps(v, g1, g2);
                    push(g1 + eps * g2);
                }
            }
        }
    } else {
        std::vector<Vec> nz;
        for (const Vec& x : v)
            if (!is_zero(x)) nz.push_back(x);
        std::vector<Vec> rays;
        for (const Vec& x : nz) {
            rays.push_back(x);
            rays.push_back(Rat(-1) * x);
        }
        for (std::size_t i = 0; i < nz.size(); ++i) {
            for (std::size_t j = i + 1; j < nz.size(); ++j) {
                Vec c = detail::cross3(nz[i], nz[j]);
                if (is_zero(c)) continue;
                rays.push_back(c);
                rays.push_back(Rat(-1) * c);
            }
        }
        for (const Vec& g1 : rays) {
            push(g1);
            std::vector<Vec> tied;
            for (const Vec& x : nz)
                if (sgn(dot(g1, x)) == 0) tied.push_back(x);
            if (tied.empty()) continue;
            std::vector<Vec> seconds;
            for (const Vec& u : tied) {
                seconds.push_back(u);
                seconds.push_back(Rat(-1) * u);
                Vec w = detail::cross3(g1, u);
                if (!is_zero(w)) {
                    seconds.push_back(w);
                    seconds.push_back(Rat(-1) * w);
                }
            }
            for (const Vec& g2 : seconds) {
                std::vector<Vec> tied2;
                for (const Vec& u : tied)
                    if (sgn(dot(g2, u)) == 0) tied2.push_back(u);
                if (tied2.empty()) {
                    Rat eps = detail::sign_preserving_eps(v, g1, g2);
                    push(g1 + eps * g2);
                    continue;
                }
                Vec ell = detail::cross3(g1, g2);
                for (const Vec& g3 : {ell, Rat(-1) * ell}) {
                    if (is_zero(g3)) continue;
                    Rat delta = detail::sign_preserving_eps(tied, g2, g3);
                    Vec inner = g2 + delta * g3;
                    Rat eps = detail::sign_preserving_eps(v, g1, inner);
                    push(g1 + eps * inner);
                }
            }
        }
    }

    DepthReport rep;
    rep.point = p;
    if (candidates.empty()) {
        // Every set point coincides with p (or S is empty as seen from p).
        rep.depth = s.size();
        Vec normal(d, Rat(0));
        normal[0] = 1;
        rep.witness = Halfspace{normal, dot(normal, p)};
        return rep;
    }
    int best = -1;
    Vec best_c;
    for (const Vec& c : candidates) {
        int cnt = detail::halfspace_count(v, c);
        if (best < 0 || cnt < best) {
            best = cnt;
            best_c = c;
        }
    }
    rep.depth = best;
    rep.witness = Halfspace{best_c, dot(best_c, p)};
    // The witness must reproduce the reported count on the original points.
    int recount = 0;
    for (int i = 0; i < s.size(); ++i)
        if (dot(rep.witness.normal, s.point(i)) >= rep.witness.offset) ++recount;
    if (recount != rep.depth) throw Error("internal: depth witness failed recount");
    return rep;
}

/// C^t_1(S) as a single cell: the intersection of the hulls of all
/// (|S|-t)-subsets.
inline ConvexCell centerpoint_cell(PointSetPtr s, int t) {
    if (t < 0) throw Error("tolerance must be nonnegative");
    if (s->size() <= t) throw Error("cannot delete as many points as the set has");
    std::vector<std::vector<int>> hulls = all_combinations(s->size(), s->size() - t);
    return ConvexCell::make(std::move(s), std::move(hulls));
}

struct RadoReport {
    int n = 0;
    int t = 0;
    int dim = 0;
    bool meets_rado_bound = false; // |S| >= t(d+1)+1
    bool nonempty = false;
    std::optional<Vec> witness;
    std::optional<DepthReport> witness_depth; // filled when dim <= 3
};

/// Decides nonemptiness of the centerpoint cell, returning a certified
/// witness and (in low dimension) its exact Tukey depth.
inline RadoReport rado_check(PointSetPtr s, int t) {
    RadoReport rep;
    rep.n = s->size();
    rep.t = t;
    rep.dim = s->dim();
    rep.meets_rado_bound = s->size() >= t * (s->dim() + 1) + 1;
    ConvexCell cell = centerpoint_cell(s, t);
    CellStatus st = cell_feasible(cell);
    rep.nonempty = st.feasible();
    if (st.feasible()) {
        rep.witness = st.point;
        if (s->dim() <= 3) rep.witness_depth = tukey_depth(*st.point, *s);
    }
    return rep;
}

} // namespace tverberg
