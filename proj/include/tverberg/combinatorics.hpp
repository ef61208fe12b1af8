#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tverberg/errors.hpp"

namespace tverberg {

/// Streams every unordered partition of {0..n-1} into exactly r nonempty
/// parts, once each, in canonical order. A partition is encoded as a
/// restricted growth string; parts come out sorted by least element. The
/// number of items produced is the Stirling number S(n, r).
class PartitionStream {
public:
    PartitionStream(int n, int r) : n_(n), r_(r) {
        if (r < 1 || n < r) {
            done_ = true;
            return;
        }
        a_.assign(n_, 0);
        complete_from(0);
    }

    std::optional<std::vector<std::vector<int>>> next() {
        if (done_) return std::nullopt;
        auto parts = materialize();
        advance();
        return parts;
    }

    /// Restricted growth string of the current item (test/debug hook).
    const std::vector<int>& rgs() const { return a_; }

private:
    std::vector<std::vector<int>> materialize() const {
        std::vector<std::vector<int>> parts(r_);
        for (int i = 0; i < n_; ++i) parts[a_[i]].push_back(i);
        return parts;
    }

    int prefix_max(int upto) const {
        int m = -1;
        for (int i = 0; i <= upto; ++i)
            if (a_[i] > m) m = a_[i];
        return m;
    }

    /// Fills positions from `pos` with the lexicographically smallest suffix
    /// that still reaches exactly r values: zeros, except forced climbs when
    /// the remaining positions are just enough to reach value r-1.
    void complete_from(int pos) {
        int cur = pos == 0 ? -1 : prefix_max(pos - 1);
        for (int i = pos; i < n_; ++i) {
            if (r_ - 1 - cur == n_ - i) {
                ++cur;
                a_[i] = cur;
            } else {
                a_[i] = 0;
            }
        }
    }

    void advance() {
        for (int i = n_ - 1; i >= 1; --i) {
            int pm = prefix_max(i - 1);
            int v = a_[i] + 1;
            if (v > pm + 1 || v > r_ - 1) continue;
            int newmax = v > pm ? v : pm;
            if (r_ - 1 - newmax > n_ - 1 - i) continue; // cannot reach r parts
            a_[i] = v;
            complete_from(i + 1);
            return;
        }
        done_ = true;
    }

    int n_;
    int r_;
    std::vector<int> a_;
    bool done_ = false;
};

/// Streams the k-subsets of {0..n-1} in lexicographic order.
class CombinationStream {
public:
    CombinationStream(int n, int k) : n_(n), k_(k) {
        if (k < 0 || k > n) {
            done_ = true;
            return;
        }
        c_.resize(k_);
        for (int i = 0; i < k_; ++i) c_[i] = i;
    }

    std::optional<std::vector<int>> next() {
        if (done_) return std::nullopt;
        std::vector<int> out = c_;
        advance();
        return out;
    }

private:
    void advance() {
        if (k_ == 0) {
            done_ = true;
            return;
        }
        int i = k_ - 1;
        while (i >= 0 && c_[i] == n_ - k_ + i) --i;
        if (i < 0) {
            done_ = true;
            return;
        }
        ++c_[i];
        for (int j = i + 1; j < k_; ++j) c_[j] = c_[j - 1] + 1;
    }

    int n_;
    int k_;
    std::vector<int> c_;
    bool done_ = false;
};

inline std::vector<std::vector<int>> all_combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    CombinationStream cs(n, k);
    while (auto c = cs.next()) out.push_back(std::move(*c));
    return out;
}

/// Stirling number of the second kind, saturating at `cap` (budget checks).
inline long long stirling2_capped(int n, int r, long long cap) {
    if (r < 0 || r > n) return 0;
    if (r == 0) return n == 0 ? 1 : 0;
    std::vector<long long> row(r + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, r); j >= 1; --j) {
            long long a = row[j];     // S(i-1, j)
            long long b = row[j - 1]; // S(i-1, j-1)
            long long v;
            if (a > (cap - b) / j)
                v = cap;
            else
                v = j * a + b;
            row[j] = v > cap ? cap : v;
        }
        row[0] = 0;
    }
    return row[r];
}

inline long long binomial_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int i = 1; i <= k; ++i) {
        if (v > cap / (n - k + i)) return cap;
        v = v * (n - k + i) / i;
        if (v > cap) return cap;
    }
    return v;
}

} // namespace tverberg
