#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <atomic>

#include "tverberg/combinatorics.hpp"
#include "tverberg/lp.hpp"
#include "tverberg/parallel.hpp"
#include "tverberg/point_set.hpp"

namespace tverberg {

/// Partition of (part of) a ground set into disjoint nonempty parts.
/// Indices not placed in any part are listed in `unassigned`; T_r queries use
/// full partitions (unassigned empty), flip states and deletion checks do not.
struct Partition {
    PointSetPtr ground;
    std::vector<std::vector<int>> parts;
    std::vector<int> unassigned;

    Partition(PointSetPtr g, std::vector<std::vector<int>> parts_, std::vector<int> unassigned_ = {})
        : ground(std::move(g)), parts(std::move(parts_)), unassigned(std::move(unassigned_)) {
        if (!ground) throw Error("partition without ground set");
        std::vector<char> seen(ground->size(), 0);
        auto touch = [&](int i) {
            if (i < 0 || i >= ground->size()) throw Error("partition index out of range");
            if (seen[i]) throw Error("partition index used twice");
            seen[i] = 1;
        };
        for (auto& p : parts) {
            if (p.empty()) throw Error("empty partition part");
            std::sort(p.begin(), p.end());
            for (int i : p) touch(i);
        }
        std::sort(unassigned.begin(), unassigned.end());
        for (int i : unassigned) touch(i);
    }

    int r() const { return static_cast<int>(parts.size()); }

    bool is_full() const { // every index assigned to some part
        int placed = 0;
        for (const auto& p : parts) placed += static_cast<int>(p.size());
        return placed == ground->size();
    }
};

/// Constructs a full partition, deriving nothing: parts must cover the set.
inline Partition full_partition(PointSetPtr g, std::vector<std::vector<int>> parts) {
    Partition p(std::move(g), std::move(parts));
    if (!p.is_full()) throw Error("partition does not cover the ground set");
    return p;
}

/// A common point of all part hulls together with per-part barycentric
/// coefficients certifying membership by exact substitution.
struct TverbergWitness {
    Partition partition;
    Vec point;
    std::vector<Vec> coefficients; // coefficients[j] aligns with partition.parts[j]

    /// Exact substitution check of every embedded certificate.
    bool verify() const {
        const PointSet& s = *partition.ground;
        if (coefficients.size() != partition.parts.size()) return false;
        for (std::size_t j = 0; j < partition.parts.size(); ++j) {
            const auto& part = partition.parts[j];
            const Vec& lam = coefficients[j];
            if (lam.size() != part.size()) return false;
            Rat total = 0;
            Vec combo(s.dim(), Rat(0));
            for (std::size_t k = 0; k < part.size(); ++k) {
                if (sgn(lam[k]) < 0) return false;
                total += lam[k];
                for (int c = 0; c < s.dim(); ++c) combo[c] += lam[k] * s.point(part[k])[c];
            }
            if (total != 1 || combo != point) return false;
        }
        return true;
    }
};

/// Outcome of a single-partition Tverberg check: a verified witness, or a
/// Farkas refutation of the joint feasibility system.
struct TverbergCheck {
    std::optional<TverbergWitness> witness;
    std::optional<lp::InfeasCert> refutation;

    explicit operator bool() const { return witness.has_value(); }
};

/// Decides whether the parts' hulls share a point, via the joint system with
/// one shared point variable block and one barycentric block per part.
inline TverbergCheck is_tverberg_partition(const Partition& p) {
    lp::HullIntersection hi = lp::intersect_hulls(*p.ground, p.parts);
    TverbergCheck out;
    if (hi.feasible()) {
        TverbergWitness w{p, *hi.point, hi.coeffs};
        if (!w.verify()) throw Error("internal: Tverberg witness failed verification");
        out.witness = std::move(w);
    } else {
        out.refutation = std::move(hi.cert);
    }
    return out;
}

/// Result of an exhaustive certified search over r-partitions.
struct TverbergSearch {
    std::optional<TverbergWitness> witness;
    long partitions_examined = 0;
    long refuted_certified = 0; // infeasible partitions whose certificates verified
};

/// Exhaustive search for a Tverberg r-partition over the active indices
/// (all indices when `active` is empty). The witness returned is the one
/// with the smallest canonical enumeration index regardless of thread
/// count. A None result means every partition was refuted with a verified
/// certificate.
inline TverbergSearch tverberg_exists(PointSetPtr s, int r, std::vector<int> active = {},
                                      int threads = 1) {
    if (r < 1) throw Error("r must be positive");
    if (active.empty()) {
        active.resize(s->size());
        for (int i = 0; i < s->size(); ++i) active[i] = i;
    } else {
        std::sort(active.begin(), active.end());
    }
    std::vector<int> unassigned;
    if (static_cast<int>(active.size()) < s->size()) {
        std::vector<char> in(s->size(), 0);
        for (int i : active) in[i] = 1;
        for (int i = 0; i < s->size(); ++i)
            if (!in[i]) unassigned.push_back(i);
    }
    std::vector<std::vector<std::vector<int>>> all;
    PartitionStream ps(static_cast<int>(active.size()), r);
    while (auto parts = ps.next()) {
        for (auto& part : *parts)
            for (int& i : part) i = active[i];
        all.push_back(std::move(*parts));
    }
    const long n = static_cast<long>(all.size());
    std::vector<std::optional<TverbergWitness>> found(all.size());
    std::atomic<long> best{n};
    std::atomic<long> examined{0};
    std::atomic<long> refuted{0};
    parallel_for(n, threads, [&](long i) {
        if (i > best.load()) return; // a lower-index witness already exists
        Partition p(s, all[i], unassigned);
        examined.fetch_add(1);
        TverbergCheck chk = is_tverberg_partition(p);
        if (chk) {
            found[i] = std::move(chk.witness);
            long cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        } else {
            refuted.fetch_add(1); // intersect_hulls verified the certificate
        }
    });
    TverbergSearch res;
    res.partitions_examined = examined.load();
    res.refuted_certified = refuted.load();
    if (best.load() < n) res.witness = std::move(found[best.load()]);
    return res;
}

/// Tolerance check: the fixed partition keeps a common point after deleting
/// any t indices of the ground set. A part emptied by a deletion fails.
inline bool is_tolerant_partition(const Partition& p, int t) {
    const int n = p.ground->size();
    if (t < 0) throw Error("tolerance must be nonnegative");
    CombinationStream del(n, t);
    while (auto sub = del.next()) {
        std::vector<char> deleted(n, 0);
        for (int i : *sub) deleted[i] = 1;
        std::vector<std::vector<int>> remaining;
        bool emptied = false;
        for (const auto& part : p.parts) {
            std::vector<int> keep;
            for (int i : part)
                if (!deleted[i]) keep.push_back(i);
            if (keep.empty()) {
                emptied = true;
                break;
            }
            remaining.push_back(std::move(keep));
        }
        if (emptied) return false;
        if (!lp::intersect_hulls(*p.ground, remaining).feasible()) return false;
    }
    return true;
}

/// Ordered Radon partition carved out of an affine dependence, with the
/// dependence normalized onto the l1-sphere of radius 2 so that the positive
/// and negative coefficient groups are convex weights.
struct RadonPair {
    std::vector<int> a; // indices with positive coefficient
    std::vector<int> b; // indices with negative coefficient
    Vec point;          // sum of positive-part weights times points
    Vec normalized;     // the normalized dependence itself
};

inline RadonPair radon_from_dependence(const PointSet& s, const Vec& alpha) {
    if (static_cast<int>(alpha.size()) != s.size() || is_zero(alpha) || !is_dependence(s, alpha))
        throw NotADependence("vector is not a nonzero affine dependence of the set");
    Rat l1 = 0;
    for (const Rat& x : alpha) l1 += abs(x);
    RadonPair out;
    out.normalized.resize(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) out.normalized[i] = Rat(2) * alpha[i] / l1;
    out.point.assign(s.dim(), Rat(0));
    for (int i = 0; i < s.size(); ++i) {
        int sg = sgn(out.normalized[i]);
        if (sg > 0) {
            out.a.push_back(i);
            for (int c = 0; c < s.dim(); ++c) out.point[c] += out.normalized[i] * s.point(i)[c];
        } else if (sg < 0) {
            out.b.push_back(i);
        }
    }
    // Both groups carry total weight 1, so the point lies in both hulls;
    // check it by substitution on the negative side too.
    Vec neg(s.dim(), Rat(0));
    Rat wpos = 0, wneg = 0;
    for (int i : out.a) wpos += out.normalized[i];
    for (int i : out.b) {
        wneg -= out.normalized[i];
        for (int c = 0; c < s.dim(); ++c) neg[c] -= out.normalized[i] * s.point(i)[c];
    }
    if (wpos != 1 || wneg != 1 || neg != out.point)
        throw Error("internal: Radon normalization failed verification");
    return out;
}

} // namespace tverberg
