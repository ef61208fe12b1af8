#pragma once

#include <utility>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

/// Dense rational matrix, row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols()) throw Error("ragged row list");
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec row(int i) const {
        Vec r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    Vec apply(const Vec& v) const {
        Vec r(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    Mat matrix;
    std::vector<int> pivots; // pivot column per pivot row, ascending
};

/// Reduced row echelon form over Q (Gauss-Jordan, exact).
inline RrefResult rref(const Mat& m) {
    Mat a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (sgn(a.at(i, c)) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        a.swap_rows(r, p);
        Rat inv = 1 / a.at(r, c);
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a.at(i, c)) == 0) continue;
            Rat f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

inline int rank(const Mat& m) {
    return static_cast<int>(rref(m).pivots.size());
}

/// Exact kernel basis, canonicalized from the RREF free columns: the basis
/// vector for free column f has a 1 in coordinate f.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            v[rr.pivots[pr]] = -rr.matrix.at(static_cast<int>(pr), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank of the span of `rows` (empty rows list has rank 0).
inline int span_rank(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    return rank(Mat::from_rows(rows));
}

/// True iff v lies in the linear span of `rows`.
inline bool in_span(const std::vector<Vec>& rows, const Vec& v) {
    int r0 = span_rank(rows);
    std::vector<Vec> ext = rows;
    ext.push_back(v);
    return span_rank(ext) == r0;
}

} // namespace tverberg
