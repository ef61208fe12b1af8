#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tverberg/combinatorics.hpp"
#include "tverberg/lp.hpp"
#include "tverberg/matrix.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/point_set.hpp"

namespace tverberg {

/// Implicit polytope {p : p in conv(A) for every index subset A in hulls}.
/// Kept in hull-list form; all queries reduce to LP.
struct ConvexCell {
    PointSetPtr ground;
    std::vector<std::vector<int>> hulls;

    /// Canonical form: hulls sorted, duplicates removed, and any hull that is
    /// a superset of another dropped (its constraint is implied).
    static ConvexCell make(PointSetPtr ground, std::vector<std::vector<int>> hulls) {
        if (hulls.empty()) throw Error("cell with no hulls");
        for (auto& h : hulls) {
            if (h.empty()) throw EmptyIndexSet("cell hull with empty index set");
            std::sort(h.begin(), h.end());
            h.erase(std::unique(h.begin(), h.end()), h.end());
        }
        std::sort(hulls.begin(), hulls.end());
        hulls.erase(std::unique(hulls.begin(), hulls.end()), hulls.end());
        std::vector<std::vector<int>> keep;
        for (std::size_t i = 0; i < hulls.size(); ++i) {
            bool implied = false;
            for (std::size_t j = 0; j < hulls.size() && !implied; ++j) {
                if (i == j) continue;
                if (std::includes(hulls[i].begin(), hulls[i].end(), hulls[j].begin(), hulls[j].end()) &&
                    hulls[i] != hulls[j])
                    implied = true;
            }
            if (!implied) keep.push_back(hulls[i]);
        }
        return ConvexCell{std::move(ground), std::move(keep)};
    }
};

using CellStatus = lp::HullIntersection;

/// Certified feasibility of a cell: a common point with per-hull barycentric
/// coefficients, or a Farkas refutation of the joint system.
inline CellStatus cell_feasible(const ConvexCell& c) {
    return lp::intersect_hulls(*c.ground, c.hulls);
}

namespace detail {

/// Maximizes obj . p over the cell by lazily growing the active hull set.
/// Cells are compact, so the optimum always exists once feasibility is known.
inline std::pair<Rat, Vec> cell_max(const ConvexCell& cell, const Vec& obj) {
    const PointSet& g = *cell.ground;
    const int d = g.dim();
    const int nh = static_cast<int>(cell.hulls.size());
    std::vector<int> active = {0};
    std::vector<char> in_active(nh, 0);
    in_active[0] = 1;
    for (;;) {
        std::vector<std::vector<int>> act;
        for (int a : active) act.push_back(cell.hulls[a]);
        lp::LinearSystem sys = lp::hull_intersection_system(g, act);
        Vec full_obj(sys.vars, Rat(0));
        for (int c = 0; c < d; ++c) full_obj[c] = obj[c];
        lp::OptResult res = lp::maximize(sys, full_obj);
        if (res.status != lp::OptStatus::Optimal)
            throw Error("internal: cell optimization did not reach an optimum");
        Vec p(res.point.begin(), res.point.begin() + d);
        int violated = -1;
        for (int h = 0; h < nh && violated < 0; ++h) {
            if (in_active[h]) continue;
            if (!lp::in_convex_hull(p, g, cell.hulls[h])) violated = h;
        }
        if (violated < 0) return {res.value, std::move(p)};
        active.push_back(violated);
        in_active[violated] = 1;
        std::sort(active.begin(), active.end());
    }
}

} // namespace detail

/// Affine-hull dimension of the cell, with dim(empty) = -1. Alternates
/// between realizing new directions inside the cell and certifying
/// functionals constant on it, until the ambient dimension is accounted for.
inline int cell_dim(const ConvexCell& cell) {
    CellStatus st = cell_feasible(cell);
    if (!st.feasible()) return -1;
    const int d = cell.ground->dim();
    const Vec p0 = *st.point;
    std::vector<Vec> dirs;
    std::vector<Vec> eqs;
    while (static_cast<int>(dirs.size() + eqs.size()) < d) {
        Mat dm(static_cast<int>(dirs.size()), d);
        for (std::size_t i = 0; i < dirs.size(); ++i)
            for (int j = 0; j < d; ++j) dm.at(static_cast<int>(i), j) = dirs[i][j];
        Vec c;
        for (const Vec& cand : kernel_basis(dm)) {
            if (!in_span(eqs, cand)) {
                c = cand;
                break;
            }
        }
        if (c.empty()) throw Error("internal: no probing functional available");
        auto [vmax, pmax] = detail::cell_max(cell, c);
        Vec neg(d);
        for (int j = 0; j < d; ++j) neg[j] = -c[j];
        auto [vmin_neg, pmin] = detail::cell_max(cell, neg);
        if (vmax != -vmin_neg)
            dirs.push_back(pmax - pmin);
        else
            eqs.push_back(std::move(c));
    }
    return static_cast<int>(dirs.size());
}

/// Finite union of convex cells over a common ground set; the exact
/// representation of T_r(S) and its cores. Construction counters record how
/// many candidate cells were examined and how many were refuted with
/// verified infeasibility certificates.
struct Region {
    PointSetPtr ground;
    std::vector<ConvexCell> cells;
    long candidates_examined = 0;
    long refuted_certified = 0;

    bool empty() const { return cells.empty(); }
};

/// T_r over the active indices (all of S when `active` is empty): the union
/// of cells P(pi) over all feasible unordered r-partitions pi, in canonical
/// enumeration order regardless of thread count.
inline Region tverberg_region(PointSetPtr s, int r, std::vector<int> active = {}, int threads = 1) {
    if (r < 1) throw Error("r must be positive");
    if (active.empty()) {
        active.resize(s->size());
        for (int i = 0; i < s->size(); ++i) active[i] = i;
    } else {
        std::sort(active.begin(), active.end());
    }
    std::vector<ConvexCell> cand;
    PartitionStream ps(static_cast<int>(active.size()), r);
    while (auto parts = ps.next()) {
        for (auto& part : *parts)
            for (int& i : part) i = active[i];
        cand.push_back(ConvexCell::make(s, *parts));
    }
    std::vector<char> ok(cand.size(), 0);
    parallel_for(static_cast<long>(cand.size()), threads,
                 [&](long i) { ok[i] = cell_feasible(cand[i]).feasible() ? 1 : 0; });
    Region reg;
    reg.ground = s;
    reg.candidates_examined = static_cast<long>(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (ok[i])
            reg.cells.push_back(std::move(cand[i]));
        else
            ++reg.refuted_certified;
    }
    return reg;
}

/// Max cell dimension; -1 for the empty region.
inline int region_dim(const Region& reg) {
    int best = -1;
    for (const ConvexCell& c : reg.cells) best = std::max(best, cell_dim(c));
    return best;
}

/// True iff some cell contains p (independent certified membership per hull).
inline bool region_contains(const Region& reg, const Vec& p) {
    for (const ConvexCell& c : reg.cells) {
        bool all = true;
        for (const auto& h : c.hulls) {
            if (!lp::in_convex_hull(p, *reg.ground, h)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

/// Intersection as a region: pairwise hull-list concatenations, canonical-
/// ized, infeasible cells pruned with verified certificates. Cells whose
/// hull list is a superset of another cell's are dropped (syntactic
/// domination: more constraints, so a subset as a point set). No geometric
/// containment tests are performed.
inline Region region_intersect(const Region& a, const Region& b) {
    if (a.ground != b.ground && !(a.ground->dim() == b.ground->dim() && a.ground->points() == b.ground->points()))
        throw Error("region intersection requires a common ground set");
    Region out;
    out.ground = a.ground;
    std::vector<ConvexCell> merged;
    for (const ConvexCell& ca : a.cells) {
        for (const ConvexCell& cb : b.cells) {
            std::vector<std::vector<int>> hulls = ca.hulls;
            hulls.insert(hulls.end(), cb.hulls.begin(), cb.hulls.end());
            merged.push_back(ConvexCell::make(out.ground, std::move(hulls)));
        }
    }
    std::sort(merged.begin(), merged.end(),
              [](const ConvexCell& x, const ConvexCell& y) { return x.hulls < y.hulls; });
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const ConvexCell& x, const ConvexCell& y) { return x.hulls == y.hulls; }),
                 merged.end());
    std::vector<char> dominated(merged.size(), 0);
    auto hull_subset = [](const std::vector<std::vector<int>>& small,
                          const std::vector<std::vector<int>>& big) {
        for (const auto& h : small)
            if (!std::binary_search(big.begin(), big.end(), h)) return false;
        return true;
    };
    for (std::size_t i = 0; i < merged.size(); ++i) {
        for (std::size_t j = 0; j < merged.size() && !dominated[i]; ++j) {
            if (i == j || dominated[j]) continue;
            if (merged[j].hulls.size() < merged[i].hulls.size() &&
                hull_subset(merged[j].hulls, merged[i].hulls))
                dominated[i] = 1;
        }
    }
    for (std::size_t i = 0; i < merged.size(); ++i) {
        if (dominated[i]) continue;
        ++out.candidates_examined;
        if (cell_feasible(merged[i]).feasible())
            out.cells.push_back(std::move(merged[i]));
        else
            ++out.refuted_certified;
    }
    return out;
}

/// C^t_r(S) as an explicit region: fold of region_intersect over
/// tverberg_region(S minus S', r) for every t-subset S'. The intermediate
/// cell count is capped; beyond the budget a SearchExhausted is raised
/// (point queries should use core_member instead).
inline Region core_region(PointSetPtr s, int r, int t, long cell_budget = 50000, int threads = 1) {
    if (t < 0) throw Error("tolerance must be nonnegative");
    if (s->size() <= t) throw Error("cannot delete as many points as the set has");
    const int n = s->size();
    std::optional<Region> acc;
    CombinationStream del(n, t);
    while (auto sub = del.next()) {
        std::vector<char> deleted(n, 0);
        for (int i : *sub) deleted[i] = 1;
        std::vector<int> active;
        for (int i = 0; i < n; ++i)
            if (!deleted[i]) active.push_back(i);
        Region term = tverberg_region(s, r, active, threads);
        if (!acc) {
            acc = std::move(term);
        } else {
            if (static_cast<long>(acc->cells.size()) * static_cast<long>(term.cells.size()) > cell_budget)
                throw SearchExhausted("core_region cell budget exceeded; use core_member for point queries");
            long cand = acc->candidates_examined + term.candidates_examined;
            long refut = acc->refuted_certified + term.refuted_certified;
            acc = region_intersect(*acc, term);
            acc->candidates_examined += cand;
            acc->refuted_certified += refut;
        }
        if (acc->cells.empty()) break; // intersection can only stay empty
    }
    return std::move(*acc);
}

/// Membership in C^t_r(S) at a fixed point, without building the region.
/// Per deletion it searches for r pairwise disjoint index sets whose hulls
/// contain p; by Caratheodory it suffices to scan inclusion-minimal
/// capturing sets of size at most d+1, and any r disjoint ones extend to a
/// full partition by dumping leftovers into one part (hulls only grow).
inline bool core_member(const Vec& p, PointSetPtr s, int r, int t) {
    if (r < 1) throw Error("r must be positive");
    if (t < 0) throw Error("tolerance must be nonnegative");
    const int n = s->size();
    if (n <= t) throw Error("cannot delete as many points as the set has");
    if (static_cast<int>(p.size()) != s->dim()) throw Error("query point has wrong dimension");
    std::map<unsigned long long, bool> memo;
    auto captures = [&](unsigned long long mask, const std::vector<int>& idxs) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        bool in = static_cast<bool>(lp::in_convex_hull(p, *s, idxs));
        memo.emplace(mask, in);
        return in;
    };
    const int cap_size = std::min(s->dim() + 1, n);
    CombinationStream del(n, t);
    while (auto sub = del.next()) {
        std::vector<char> deleted(n, 0);
        for (int i : *sub) deleted[i] = 1;
        std::vector<int> active;
        for (int i = 0; i < n; ++i)
            if (!deleted[i]) active.push_back(i);
        if (static_cast<int>(active.size()) < r) return false;
        // Inclusion-minimal capturing subsets, found size-ascending; a mask
        // containing a known capturing mask is skipped without an LP.
        std::vector<unsigned long long> caps;
        for (int k = 1; k <= std::min(cap_size, static_cast<int>(active.size())); ++k) {
            CombinationStream cs(static_cast<int>(active.size()), k);
            while (auto pick = cs.next()) {
                unsigned long long mask = 0;
                std::vector<int> idxs;
                for (int j : *pick) {
                    idxs.push_back(active[j]);
                    mask |= 1ULL << active[j];
                }
                bool redundant = false;
                for (unsigned long long m : caps) {
                    if ((m & mask) == m) {
                        redundant = true;
                        break;
                    }
                }
                if (redundant) continue;
                if (captures(mask, idxs)) caps.push_back(mask);
            }
        }
        // r pairwise disjoint capturing sets?
        std::function<bool(std::size_t, unsigned long long, int)> pack =
            [&](std::size_t start, unsigned long long used, int need) -> bool {
            if (need == 0) return true;
            for (std::size_t i = start; i < caps.size(); ++i) {
                if (caps[i] & used) continue;
                if (pack(i + 1, used | caps[i], need - 1)) return true;
            }
            return false;
        };
        if (!pack(0, 0ULL, r)) return false;
    }
    return true;
}

/// Per-r dimensions of T_r(S) for r = 1..|S| and their sum.
struct CascadeSums {
    long long sum = 0;
    std::vector<int> dims;
};

inline CascadeSums cascade_sum(PointSetPtr s, int threads = 1) {
    if (s->size() == 0) throw Error("cascade sum of an empty set");
    CascadeSums out;
    for (int r = 1; r <= s->size(); ++r) {
        int d = region_dim(tverberg_region(s, r, {}, threads));
        out.dims.push_back(d);
        out.sum += d;
    }
    return out;
}

} // namespace tverberg
