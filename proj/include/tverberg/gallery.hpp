#pragma once

#include <string>
#include <vector>

#include "tverberg/cascade.hpp"
#include "tverberg/flip.hpp"
#include "tverberg/point_set.hpp"

namespace tverberg::gallery {

/// Planar cross: two antipodal pairs plus the origin. The canonical
/// unique-Radon-point instance (T_2 = {0}).
inline PointSetPtr cross_set() {
    return make_point_set(2, {{rat(1), rat(0)},
                              {rat(-1), rat(0)},
                              {rat(0), rat(1)},
                              {rat(0), rat(-1)},
                              {rat(0), rat(0)}});
}

/// Octahedron vertices plus center in R^3 (7 points, tolerance 2).
inline PointSetPtr cross3d_set() {
    return make_point_set(3, {{rat(1), rat(0), rat(0)},
                              {rat(-1), rat(0), rat(0)},
                              {rat(0), rat(1), rat(0)},
                              {rat(0), rat(-1), rat(0)},
                              {rat(0), rat(0), rat(1)},
                              {rat(0), rat(0), rat(-1)},
                              {rat(0), rat(0), rat(0)}});
}

/// A lopsided cross: the same block structure as cross_set but with uneven
/// arm lengths, so the block constants are not all 1.
inline PointSetPtr asym_star_set() {
    return make_point_set(2, {{rat(2), rat(0)},
                              {rat(-1), rat(0)},
                              {rat(0), rat(3)},
                              {rat(0), rat(-1)},
                              {rat(0), rat(0)}});
}

/// Planar cross embedded in the z = 0 plane of R^3 plus one point off the
/// plane; the extra point sits in no affine dependence (an ignored index).
inline PointSetPtr planted_cross_set() {
    return make_point_set(3, {{rat(1), rat(0), rat(0)},
                              {rat(-1), rat(0), rat(0)},
                              {rat(0), rat(1), rat(0)},
                              {rat(0), rat(-1), rat(0)},
                              {rat(0), rat(0), rat(0)},
                              {rat(0), rat(0), rat(1)}});
}

/// {0, 1, ..., n-1} on the line.
inline PointSetPtr line_set(int n) {
    if (n < 1) throw Error("line gallery needs at least one point");
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rat(i)});
    return make_point_set(1, std::move(pts));
}

/// Three collinear points; the minimal Radon split instance.
inline PointSetPtr line3_set() {
    return make_point_set(1, {{rat(-1)}, {rat(0)}, {rat(1)}});
}

/// Axis-aligned square: the diagonals cross in a single Radon point.
inline PointSetPtr quad_set() {
    return make_point_set(2, {{rat(0), rat(0)}, {rat(2), rat(0)}, {rat(2), rat(2)}, {rat(0), rat(2)}});
}

/// Triangle plus an interior point (its Radon point).
inline PointSetPtr triangle_center_set() {
    return make_point_set(2, {{rat(0), rat(0)}, {rat(3), rat(0)}, {rat(0), rat(3)}, {rat(1), rat(1)}});
}

/// Tetrahedron plus an interior point in R^3.
inline PointSetPtr tet_center_set() {
    return make_point_set(3, {{rat(0), rat(0), rat(0)},
                              {rat(4), rat(0), rat(0)},
                              {rat(0), rat(4), rat(0)},
                              {rat(0), rat(0), rat(4)},
                              {rat(1), rat(1), rat(1)}});
}

struct CuratedInstance {
    std::string name;
    PointSetPtr set;
    int t;                  // |S| = affine_span_dim + t + 2
    CascadeBranch expected; // branch the construction must take
};

/// The hand-built suite for the constructive-partition checks. The split
/// branch only occurs at t = 0 (one block, the Radon sign split): for t >= 1
/// the per-block identities force duplicate points, so no valid instance
/// exists with exactly t+1 blocks.
inline std::vector<CuratedInstance> curated_cascade_suite() {
    return {
        {"curated-cascade-1", cross_set(), 1, CascadeBranch::ManyBlocks},
        {"curated-cascade-2", cross3d_set(), 2, CascadeBranch::ManyBlocks},
        {"curated-cascade-3", asym_star_set(), 1, CascadeBranch::ManyBlocks},
        {"curated-cascade-4", planted_cross_set(), 1, CascadeBranch::ManyBlocks},
        {"curated-cascade-5", line3_set(), 0, CascadeBranch::SplitCase},
        {"curated-cascade-6", quad_set(), 0, CascadeBranch::SplitCase},
        {"curated-cascade-7", triangle_center_set(), 0, CascadeBranch::SplitCase},
        {"curated-cascade-8", tet_center_set(), 0, CascadeBranch::SplitCase},
    };
}

/// The paper's ten-point configuration in R^5.
inline PointSetPtr paper_counterexample_set() { return counterexample_set(); }

} // namespace tverberg::gallery
