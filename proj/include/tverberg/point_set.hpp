#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/matrix.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Finite set of points with exact rational coordinates. Points are pairwise
/// distinct and keep their construction order; all queries refer to points by
/// 0-based index (rendered 1-based at the CLI boundary).
class PointSet {
public:
    PointSet(int dim, std::vector<Vec> points, std::vector<std::string> labels = {})
        : dim_(dim), pts_(std::move(points)), labels_(std::move(labels)) {
        if (dim_ < 1) throw Error("point set dimension must be at least 1");
        for (const Vec& p : pts_)
            if (static_cast<int>(p.size()) != dim_)
                throw Error("point has wrong dimension");
        for (std::size_t i = 0; i < pts_.size(); ++i)
            for (std::size_t j = i + 1; j < pts_.size(); ++j)
                if (pts_[i] == pts_[j])
                    throw Error("duplicate point at indices " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1));
        if (!labels_.empty() && labels_.size() != pts_.size())
            throw Error("label list length mismatch");
    }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(pts_.size()); }
    const Vec& point(int i) const { return pts_[i]; }
    const std::vector<Vec>& points() const { return pts_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    int dim_;
    std::vector<Vec> pts_;
    std::vector<std::string> labels_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

inline PointSetPtr make_point_set(int dim, std::vector<Vec> points, std::vector<std::string> labels = {}) {
    return std::make_shared<const PointSet>(dim, std::move(points), std::move(labels));
}

/// The (d+1) x N matrix whose i-th column is (x_i, 1). Its kernel is the
/// space of affine dependences of the set.
inline Mat augmented_matrix(const PointSet& s) {
    Mat L(s.dim() + 1, s.size());
    for (int i = 0; i < s.size(); ++i) {
        for (int k = 0; k < s.dim(); ++k) L.at(k, i) = s.point(i)[k];
        L.at(s.dim(), i) = 1;
    }
    return L;
}

/// Dimension of the affine hull: rank of the augmented matrix minus 1.
inline int affine_span_dim(const PointSet& s) {
    if (s.size() == 0) throw Error("affine span of an empty set");
    return rank(augmented_matrix(s)) - 1;
}

/// Basis of the space W of affine dependences: every basis vector a satisfies
/// sum_i a_i = 0 and sum_i a_i x_i = 0, and dim W = N - 1 - affine_span_dim.
struct DependenceSpace {
    PointSetPtr ground;
    std::vector<Vec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

inline DependenceSpace dependence_space(PointSetPtr s) {
    if (!s || s->size() == 0) throw Error("dependence space of an empty set");
    return {s, kernel_basis(augmented_matrix(*s))};
}

/// Exact check that alpha is an affine dependence of s.
inline bool is_dependence(const PointSet& s, const Vec& alpha) {
    if (static_cast<int>(alpha.size()) != s.size()) return false;
    Rat coef_sum = 0;
    Vec pt_sum(s.dim(), Rat(0));
    for (int i = 0; i < s.size(); ++i) {
        coef_sum += alpha[i];
        for (int k = 0; k < s.dim(); ++k) pt_sum[k] += alpha[i] * s.point(i)[k];
    }
    return sgn(coef_sum) == 0 && is_zero(pt_sum);
}

} // namespace tverberg
