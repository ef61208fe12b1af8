#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tverberg/partitions.hpp"
#include "tverberg/point_set.hpp"
#include "tverberg/regions.hpp"

namespace tverberg {

/// Some(p) iff T_2(S) is nonempty, every feasible 2-partition cell is a
/// single point, and all those points coincide. Decided by full certified
/// enumeration of the 2-partitions.
inline std::optional<Vec> unique_radon_point(PointSetPtr s) {
    Region t2 = tverberg_region(s, 2);
    if (t2.cells.empty()) return std::nullopt;
    std::optional<Vec> pt;
    for (const ConvexCell& c : t2.cells) {
        if (cell_dim(c) != 0) return std::nullopt;
        Vec p = *cell_feasible(c).point;
        if (!pt)
            pt = std::move(p);
        else if (*pt != p)
            return std::nullopt;
    }
    return pt;
}

/// Grouping of the indices of an origin-normalized set by proportionality of
/// their coordinate functionals on the dependence space W. Within a block,
/// lambda_i = c_i * phi_j holds identically on W with the block functional
/// phi_j chosen as the least index's functional (so that c_{least} = 1);
/// across blocks no proportionality holds. Indices whose functional vanishes
/// identically are `ignored`.
struct BlockDecomposition {
    PointSetPtr ground; // translated so every dependence has Radon point 0
    DependenceSpace space;
    std::vector<int> ignored;
    std::vector<std::vector<int>> blocks;
    std::vector<Vec> functionals; // per block, coordinates in the W basis
    Vec constants;                // per ground index (0 for ignored)
};

inline BlockDecomposition block_decomposition(PointSetPtr s) {
    BlockDecomposition bd;
    bd.ground = s;
    bd.space = dependence_space(s);
    const int n = s->size();
    const int w = bd.space.dim();
    // Normalization guard, checked on the basis dependences: the positive
    // part of each must sum to the origin.
    for (const Vec& alpha : bd.space.basis) {
        Vec pos(s->dim(), Rat(0));
        for (int i = 0; i < n; ++i) {
            if (sgn(alpha[i]) > 0)
                for (int c = 0; c < s->dim(); ++c) pos[c] += alpha[i] * s->point(i)[c];
        }
        if (!is_zero(pos))
            throw NotNormalized("a basis dependence has a nonzero Radon point; translate the set first");
    }
    bd.constants.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        Vec f(w);
        for (int k = 0; k < w; ++k) f[k] = bd.space.basis[k][i];
        if (is_zero(f)) {
            bd.ignored.push_back(i);
            continue;
        }
        bool placed = false;
        for (std::size_t j = 0; j < bd.blocks.size() && !placed; ++j) {
            const Vec& phi = bd.functionals[j];
            int k0 = 0;
            while (sgn(phi[k0]) == 0) ++k0;
            Rat c = f[k0] / phi[k0];
            if (sgn(c) == 0) continue;
            bool prop = true;
            for (int k = 0; k < w && prop; ++k)
                if (f[k] != c * phi[k]) prop = false;
            if (prop) {
                bd.blocks[j].push_back(i);
                bd.constants[i] = c;
                placed = true;
            }
        }
        if (!placed) {
            bd.blocks.push_back({i});
            bd.functionals.push_back(std::move(f));
            bd.constants[i] = 1;
        }
    }
    return bd;
}

/// Barycentric certificate that the origin lies in a block's hull.
struct BlockCertificate {
    int block;
    Vec coefficients; // over the block's indices, in order
};

/// For each block, sum |c_i| x_i must vanish exactly; the normalized |c_i|
/// weights then certify 0 in conv{x_i : i in block}.
inline std::vector<BlockCertificate> claim_blocks_check(const BlockDecomposition& bd) {
    const PointSet& s = *bd.ground;
    std::vector<BlockCertificate> out;
    for (std::size_t j = 0; j < bd.blocks.size(); ++j) {
        Vec combo(s.dim(), Rat(0));
        Rat total = 0;
        for (int i : bd.blocks[j]) {
            Rat w = abs(bd.constants[i]);
            total += w;
            for (int c = 0; c < s.dim(); ++c) combo[c] += w * s.point(i)[c];
        }
        if (!is_zero(combo))
            throw ClaimFailed("block weighted point sum is nonzero; the unique-Radon-point hypothesis fails");
        BlockCertificate cert;
        cert.block = static_cast<int>(j);
        for (int i : bd.blocks[j]) cert.coefficients.push_back(abs(bd.constants[i]) / total);
        out.push_back(std::move(cert));
    }
    return out;
}

enum class CascadeBranch { ManyBlocks, SplitCase };

/// Output of the constructive multi-part partition: a certified Tverberg
/// partition into at least t+2 parts whose hulls all contain the (unique)
/// Radon point.
struct CascadeResult {
    CascadeBranch branch;
    BlockDecomposition decomposition;
    Vec radon_point;         // in the original coordinates
    TverbergWitness witness; // partition + point + per-part coefficients
    int block_count = 0;
};

namespace detail {

inline PointSetPtr translate_to(const PointSet& s, const Vec& p) {
    std::vector<Vec> pts;
    pts.reserve(s.size());
    for (int i = 0; i < s.size(); ++i) {
        Vec q(s.dim());
        for (int c = 0; c < s.dim(); ++c) q[c] = s.point(i)[c] - p[c];
        pts.push_back(std::move(q));
    }
    return make_point_set(s.dim(), std::move(pts), s.labels());
}

} // namespace detail

/// The constructive partition for a set of d+t+2 points whose Radon set is a
/// single point: blocks themselves when there are at least t+2 of them, else
/// the sign-split of the first block. `split_all_blocks` switches the
/// s = t+1 branch to splitting every block, yielding 2(t+1) parts.
inline CascadeResult construct_cascade_partition(PointSetPtr s, int t, bool split_all_blocks = false) {
    if (t < 0) throw Error("tolerance must be nonnegative");
    const int d = affine_span_dim(*s);
    if (s->size() != d + t + 2)
        throw HypothesisViolated("construction needs exactly affine_span_dim + t + 2 points");
    std::optional<Vec> p = unique_radon_point(s);
    if (!p)
        throw HypothesisViolated("dim T_2(S) > 0 (or T_2 empty): Radon set is not a single point");
    PointSetPtr shifted = detail::translate_to(*s, *p);
    BlockDecomposition bd = block_decomposition(shifted);
    const int nblocks = static_cast<int>(bd.blocks.size());
    if (nblocks <= t)
        throw HypothesisViolated("fewer than t+1 proportionality blocks; hypotheses cannot hold");
    std::vector<BlockCertificate> certs = claim_blocks_check(bd);

    std::vector<std::vector<int>> parts;
    std::vector<Vec> coeffs;
    CascadeBranch branch;
    std::vector<int> leftovers = bd.ignored;
    if (nblocks >= t + 2) {
        branch = CascadeBranch::ManyBlocks;
        for (int j = 0; j < t + 2; ++j) {
            parts.push_back(bd.blocks[j]);
            coeffs.push_back(certs[j].coefficients);
        }
        for (int j = t + 2; j < nblocks; ++j)
            leftovers.insert(leftovers.end(), bd.blocks[j].begin(), bd.blocks[j].end());
    } else {
        branch = CascadeBranch::SplitCase;
        // In this branch the identities sum c_i = 0 and sum c_i x_i = 0 hold
        // per block; verify them by substitution before relying on them.
        for (int j = 0; j < nblocks; ++j) {
            Rat csum = 0;
            Vec combo(shifted->dim(), Rat(0));
            for (int i : bd.blocks[j]) {
                csum += bd.constants[i];
                for (int c = 0; c < shifted->dim(); ++c)
                    combo[c] += bd.constants[i] * shifted->point(i)[c];
            }
            if (sgn(csum) != 0 || !is_zero(combo))
                throw HypothesisViolated("split-case block identities fail by substitution");
        }
        auto split_block = [&](int j) {
            std::vector<int> plus, minus;
            Rat gamma = 0;
            for (int i : bd.blocks[j]) {
                if (sgn(bd.constants[i]) > 0) {
                    plus.push_back(i);
                    gamma += bd.constants[i];
                } else {
                    minus.push_back(i);
                }
            }
            if (plus.empty() || minus.empty())
                throw HypothesisViolated("split-case block has one-sided constants");
            Vec cp, cm;
            for (int i : plus) cp.push_back(bd.constants[i] / gamma);
            for (int i : minus) cm.push_back(-bd.constants[i] / gamma);
            parts.push_back(std::move(plus));
            coeffs.push_back(std::move(cp));
            parts.push_back(std::move(minus));
            coeffs.push_back(std::move(cm));
        };
        if (split_all_blocks) {
            for (int j = 0; j < nblocks; ++j) split_block(j);
        } else {
            split_block(0);
            for (int j = 1; j < nblocks; ++j) {
                parts.push_back(bd.blocks[j]);
                coeffs.push_back(certs[j].coefficients);
            }
        }
    }
    // Ignored and unused vertices join the first part with zero weight.
    if (!leftovers.empty()) {
        for (int i : leftovers) {
            parts[0].push_back(i);
            coeffs[0].push_back(Rat(0));
        }
        // Partition sorts part contents; keep coefficients aligned.
        std::vector<std::pair<int, Rat>> zipped;
        for (std::size_t k = 0; k < parts[0].size(); ++k) zipped.emplace_back(parts[0][k], coeffs[0][k]);
        std::sort(zipped.begin(), zipped.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t k = 0; k < zipped.size(); ++k) {
            parts[0][k] = zipped[k].first;
            coeffs[0][k] = zipped[k].second;
        }
    }
    CascadeResult res{branch, std::move(bd), *p,
                      TverbergWitness{full_partition(s, std::move(parts)), *p, std::move(coeffs)},
                      nblocks};
    if (static_cast<int>(res.witness.partition.parts.size()) < t + 2)
        throw Error("internal: cascade partition has too few parts");
    if (!res.witness.verify()) throw Error("internal: cascade witness failed verification");
    return res;
}

/// Cascade-sum report for a set whose Radon set has dimension <= 0: per-r
/// dimensions, their sum, the affine span dimension, and the largest r with
/// a nonempty Tverberg set.
struct CascadeReport {
    long long sum = 0;
    std::vector<int> dims;
    int affine_dim = 0;
    int max_nonempty_r = 0;
};

inline CascadeReport verify_cascade_inequality(PointSetPtr s) {
    CascadeSums cs = cascade_sum(s);
    if (cs.dims.size() >= 2 && cs.dims[1] > 0)
        throw HypothesisViolated("dim T_2(S) > 0: the cascade-case hypothesis fails");
    CascadeReport rep;
    rep.sum = cs.sum;
    rep.dims = cs.dims;
    rep.affine_dim = affine_span_dim(*s);
    for (std::size_t r = 0; r < cs.dims.size(); ++r)
        if (cs.dims[r] >= 0) rep.max_nonempty_r = static_cast<int>(r) + 1;
    return rep;
}

} // namespace tverberg
