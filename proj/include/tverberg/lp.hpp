#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tverberg/errors.hpp"
#include "tverberg/point_set.hpp"
#include "tverberg/rational.hpp"

namespace tverberg::lp {

/// System of exact linear equalities A x = b with per-variable sign
/// restrictions (nonneg[j] => x_j >= 0, otherwise x_j is free).
struct LinearSystem {
    int vars = 0;
    std::vector<Vec> rows;
    Vec rhs;
    std::vector<bool> nonneg;

    LinearSystem() = default;
    explicit LinearSystem(int nvars, bool all_nonneg = false)
        : vars(nvars), nonneg(static_cast<std::size_t>(nvars), all_nonneg) {}

    void add_row(Vec coeffs, Rat b) {
        if (static_cast<int>(coeffs.size()) != vars) throw Error("row length mismatch");
        rows.push_back(std::move(coeffs));
        rhs.push_back(std::move(b));
    }

    int num_rows() const { return static_cast<int>(rows.size()); }
};

/// Exact assignment satisfying every constraint.
struct FeasWitness {
    Vec assignment;
};

/// Farkas-style refutation: multipliers lambda, one per row, such that
/// u := sum_i lambda_i row_i has u_j = 0 for every free variable and
/// u_j <= 0 for every nonnegative variable, while lambda . rhs > 0.
/// Any feasible x would give u . x <= 0 = contradiction with lambda . rhs.
struct InfeasCert {
    Vec multipliers;
};

class Verdict {
public:
    static Verdict feasible(FeasWitness w) {
        Verdict v;
        v.witness_ = std::move(w);
        return v;
    }
    static Verdict infeasible(InfeasCert c) {
        Verdict v;
        v.cert_ = std::move(c);
        return v;
    }

    bool is_feasible() const { return witness_.has_value(); }
    explicit operator bool() const { return is_feasible(); }
    const FeasWitness& witness() const { return *witness_; }
    const InfeasCert& cert() const { return *cert_; }

private:
    std::optional<FeasWitness> witness_;
    std::optional<InfeasCert> cert_;
};

/// True iff the verdict's certificate proves its branch by exact substitution.
inline bool verify_certificate(const LinearSystem& sys, const Verdict& v) {
    if (v.is_feasible()) {
        const Vec& x = v.witness().assignment;
        if (static_cast<int>(x.size()) != sys.vars) return false;
        for (int j = 0; j < sys.vars; ++j)
            if (sys.nonneg[j] && sgn(x[j]) < 0) return false;
        for (int i = 0; i < sys.num_rows(); ++i)
            if (dot(sys.rows[i], x) != sys.rhs[i]) return false;
        return true;
    }
    const Vec& lam = v.cert().multipliers;
    if (static_cast<int>(lam.size()) != sys.num_rows()) return false;
    Vec u(sys.vars, Rat(0));
    Rat beta = 0;
    for (int i = 0; i < sys.num_rows(); ++i) {
        if (sgn(lam[i]) == 0) continue;
        for (int j = 0; j < sys.vars; ++j) u[j] += lam[i] * sys.rows[i][j];
        beta += lam[i] * sys.rhs[i];
    }
    for (int j = 0; j < sys.vars; ++j) {
        if (sys.nonneg[j]) {
            if (sgn(u[j]) > 0) return false;
        } else {
            if (sgn(u[j]) != 0) return false;
        }
    }
    return sgn(beta) > 0;
}

namespace detail {

/// Dense exact-rational simplex over the split standard form. Bland's rule
/// everywhere, so termination is unconditional and output deterministic.
class Simplex {
public:
    explicit Simplex(const LinearSystem& sys) : sys_(sys) {
        // Split each free variable into a difference of two nonnegatives.
        for (int j = 0; j < sys.vars; ++j) {
            col_var_.push_back(j);
            col_sign_.push_back(1);
            if (!sys.nonneg[j]) {
                col_var_.push_back(j);
                col_sign_.push_back(-1);
            }
        }
        n_ = static_cast<int>(col_var_.size());
        m_ = sys.num_rows();
        row_sign_.assign(m_, 1);
        tab_.assign(m_, Vec(n_ + m_ + 1, Rat(0)));
        for (int i = 0; i < m_; ++i) {
            int s = sgn(sys.rhs[i]) < 0 ? -1 : 1;
            row_sign_[i] = s;
            for (int c = 0; c < n_; ++c) {
                const Rat& a = sys.rows[i][col_var_[c]];
                if (sgn(a) == 0) continue;
                tab_[i][c] = (s * col_sign_[c]) * a;
            }
            tab_[i][n_ + i] = 1;
            tab_[i][n_ + m_] = s * sys.rhs[i];
        }
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;
    }

    /// Minimizes the sum of artificials. Returns the optimal value.
    Rat phase1() {
        obj_.assign(n_ + m_ + 1, Rat(0));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j <= n_ + m_; ++j) obj_[j] -= tab_[i][j];
        for (int i = 0; i < m_; ++i) obj_[n_ + i] += 1; // c_j = 1 on artificials
        run();
        phase1_obj_ = obj_;
        return -obj_[n_ + m_];
    }

    /// After a feasible phase 1: minimizes cost (over original variables).
    /// Returns false if unbounded (ray available via extract_ray).
    bool phase2(const Vec& cost) {
        // Pivot artificials out of the basis where possible; rows that cannot
        // be cleared are redundant and stay identically zero.
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (int j = 0; j < n_; ++j) {
                if (sgn(tab_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        obj_.assign(n_ + m_ + 1, Rat(0));
        for (int j = 0; j < n_; ++j) obj_[j] = col_sign_[j] * cost[col_var_[j]];
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            const Rat cb = obj_[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (int j = 0; j <= n_ + m_; ++j) obj_[j] -= cb * tab_[i][j];
            obj_[basis_[i]] = 0;
        }
        return run();
    }

    Rat objective_value() const { return -obj_[n_ + m_]; }

    /// Current basic solution mapped back to original variables.
    Vec extract_solution() const {
        Vec x(sys_.vars, Rat(0));
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            x[col_var_[basis_[i]]] += col_sign_[basis_[i]] * tab_[i][n_ + m_];
        }
        return x;
    }

    /// Farkas multipliers from an infeasible phase 1 (optimal value > 0).
    Vec extract_infeasibility_multipliers() const {
        Vec lam(m_);
        for (int i = 0; i < m_; ++i) {
            // Dual value y_i = c_{a_i} - reduced_cost(a_i) = 1 - obj[a_i],
            // undone through the row flip applied at construction.
            lam[i] = row_sign_[i] * (Rat(1) - phase1_obj_[n_ + i]);
        }
        return lam;
    }

    /// Improving ray in original variables for an unbounded phase 2.
    Vec extract_ray() const {
        Vec ray(sys_.vars, Rat(0));
        ray[col_var_[ray_col_]] += col_sign_[ray_col_];
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            if (sgn(tab_[i][ray_col_]) == 0) continue;
            ray[col_var_[basis_[i]]] -= col_sign_[basis_[i]] * tab_[i][ray_col_];
        }
        return ray;
    }

private:
    bool run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_; ++j) {
                if (sgn(obj_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_num, best_den;
            for (int i = 0; i < m_; ++i) {
                if (sgn(tab_[i][enter]) <= 0) continue;
                if (leave < 0 ||
                    tab_[i][n_ + m_] * best_den < best_num * tab_[i][enter] ||
                    (tab_[i][n_ + m_] * best_den == best_num * tab_[i][enter] &&
                     basis_[i] < basis_[leave])) {
                    leave = i;
                    best_num = tab_[i][n_ + m_];
                    best_den = tab_[i][enter];
                }
            }
            if (leave < 0) {
                ray_col_ = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }

    void pivot(int r, int c) {
        const Rat inv = 1 / tab_[r][c];
        for (int j = 0; j <= n_ + m_; ++j)
            if (sgn(tab_[r][j]) != 0) tab_[r][j] *= inv;
        tab_[r][c] = 1;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const Rat f = tab_[i][c];
            if (sgn(f) == 0) continue;
            for (int j = 0; j <= n_ + m_; ++j)
                if (sgn(tab_[r][j]) != 0) tab_[i][j] -= f * tab_[r][j];
            tab_[i][c] = 0;
        }
        if (!obj_.empty()) {
            const Rat f = obj_[c];
            if (sgn(f) != 0) {
                for (int j = 0; j <= n_ + m_; ++j)
                    if (sgn(tab_[r][j]) != 0) obj_[j] -= f * tab_[r][j];
                obj_[c] = 0;
            }
        }
        basis_[r] = c;
    }

    const LinearSystem& sys_;
    int n_ = 0; // structural (split) columns
    int m_ = 0; // rows
    std::vector<int> col_var_;
    std::vector<int> col_sign_;
    std::vector<int> row_sign_;
    std::vector<Vec> tab_;
    Vec obj_;
    Vec phase1_obj_;
    std::vector<int> basis_;
    int ray_col_ = -1;
};

} // namespace detail

/// Decides feasibility and returns a self-verified certificate either way.
inline Verdict solve_feasibility(const LinearSystem& sys) {
    detail::Simplex sx(sys);
    Verdict v = sgn(sx.phase1()) == 0
                    ? Verdict::feasible(FeasWitness{sx.extract_solution()})
                    : Verdict::infeasible(InfeasCert{sx.extract_infeasibility_multipliers()});
    if (!verify_certificate(sys, v)) throw Error("internal: LP certificate failed verification");
    return v;
}

enum class OptStatus { Infeasible, Optimal, Unbounded };

struct OptResult {
    OptStatus status = OptStatus::Infeasible;
    Vec point;  // Optimal: a maximizer; Unbounded: a feasible base point
    Rat value;  // Optimal: the maximum of objective . x
    Vec ray;    // Unbounded: improving direction from `point`
    std::optional<InfeasCert> cert;
};

/// Maximizes objective . x over the system. Exact; deterministic.
inline OptResult maximize(const LinearSystem& sys, const Vec& objective) {
    if (static_cast<int>(objective.size()) != sys.vars) throw Error("objective length mismatch");
    detail::Simplex sx(sys);
    OptResult res;
    if (sgn(sx.phase1()) != 0) {
        res.status = OptStatus::Infeasible;
        res.cert = InfeasCert{sx.extract_infeasibility_multipliers()};
        if (!verify_certificate(sys, Verdict::infeasible(*res.cert)))
            throw Error("internal: LP certificate failed verification");
        return res;
    }
    Vec cost(sys.vars);
    for (int j = 0; j < sys.vars; ++j) cost[j] = -objective[j];
    if (!sx.phase2(cost)) {
        res.status = OptStatus::Unbounded;
        res.point = sx.extract_solution();
        res.ray = sx.extract_ray();
        Vec img(sys.num_rows(), Rat(0));
        for (int i = 0; i < sys.num_rows(); ++i) img[i] = dot(sys.rows[i], res.ray);
        if (!is_zero(img) || sgn(dot(objective, res.ray)) <= 0)
            throw Error("internal: unbounded ray failed verification");
        return res;
    }
    res.status = OptStatus::Optimal;
    res.point = sx.extract_solution();
    res.value = -sx.objective_value();
    if (!verify_certificate(sys, Verdict::feasible(FeasWitness{res.point})) ||
        dot(objective, res.point) != res.value)
        throw Error("internal: LP optimum failed verification");
    return res;
}

/// Barycentric membership test: p in conv{x_i : i in indices}. The witness
/// assignment is the coefficient vector over `indices` (in order).
inline Verdict in_convex_hull(const Vec& p, const PointSet& ground, const std::vector<int>& indices) {
    if (indices.empty()) throw EmptyIndexSet("convex hull membership over an empty index set");
    if (static_cast<int>(p.size()) != ground.dim()) throw Error("query point has wrong dimension");
    const int k = static_cast<int>(indices.size());
    LinearSystem sys(k, /*all_nonneg=*/true);
    for (int c = 0; c < ground.dim(); ++c) {
        Vec row(k);
        for (int j = 0; j < k; ++j) row[j] = ground.point(indices[j])[c];
        sys.add_row(std::move(row), p[c]);
    }
    sys.add_row(Vec(k, Rat(1)), Rat(1));
    return solve_feasibility(sys);
}

/// Joint feasibility system for an intersection-of-hulls cell: shared point
/// variables p_1..p_d (free) followed by one barycentric block per hull.
/// Row layout: for each hull in order, d coordinate rows then one sum row.
inline LinearSystem hull_intersection_system(const PointSet& ground,
                                             const std::vector<std::vector<int>>& hulls) {
    const int d = ground.dim();
    int vars = d;
    for (const auto& h : hulls) vars += static_cast<int>(h.size());
    LinearSystem sys(vars);
    for (int c = 0; c < d; ++c) sys.nonneg[c] = false;
    for (int j = d; j < vars; ++j) sys.nonneg[j] = true;
    int off = d;
    for (const auto& h : hulls) {
        if (h.empty()) throw EmptyIndexSet("cell hull with empty index set");
        const int k = static_cast<int>(h.size());
        for (int c = 0; c < d; ++c) {
            Vec row(vars, Rat(0));
            row[c] = -1;
            for (int j = 0; j < k; ++j) row[off + j] = ground.point(h[j])[c];
            sys.add_row(std::move(row), Rat(0));
        }
        Vec row(vars, Rat(0));
        for (int j = 0; j < k; ++j) row[off + j] = 1;
        sys.add_row(std::move(row), Rat(1));
        off += k;
    }
    return sys;
}

struct HullIntersection {
    std::optional<Vec> point;       // a common point, if feasible
    std::vector<Vec> coeffs;        // per-hull barycentric coefficients at `point`
    std::optional<InfeasCert> cert; // over the joint system's rows, if infeasible

    bool feasible() const { return point.has_value(); }
};

/// Verifies a Farkas certificate against the joint hull system without
/// materializing it (the system can be large for core cells).
inline bool verify_hull_infeasibility(const PointSet& ground,
                                      const std::vector<std::vector<int>>& hulls,
                                      const InfeasCert& cert) {
    const int d = ground.dim();
    int rows = 0;
    for (const auto& h : hulls) {
        (void)h;
        rows += d + 1;
    }
    if (static_cast<int>(cert.multipliers.size()) != rows) return false;
    Vec u_p(d, Rat(0)); // coefficients on the free point variables
    Rat beta = 0;
    int r = 0;
    bool ok = true;
    for (const auto& h : hulls) {
        Vec lam_coord(d);
        for (int c = 0; c < d; ++c) lam_coord[c] = cert.multipliers[r + c];
        const Rat& lam_sum = cert.multipliers[r + d];
        for (int c = 0; c < d; ++c) u_p[c] -= lam_coord[c];
        beta += lam_sum;
        for (int idx : h) {
            Rat u = lam_sum;
            for (int c = 0; c < d; ++c) u += lam_coord[c] * ground.point(idx)[c];
            if (sgn(u) > 0) ok = false; // lambda columns are nonnegative
        }
        r += d + 1;
    }
    return ok && is_zero(u_p) && sgn(beta) > 0;
}

/// Decides whether the hulls have a common point, via deterministic row
/// generation: solve over a growing active subset of hulls, checking the
/// candidate point against the rest with independent membership LPs. The
/// result is verified against the single joint system either way.
inline HullIntersection intersect_hulls(const PointSet& ground,
                                        const std::vector<std::vector<int>>& hulls) {
    if (hulls.empty()) throw Error("cell with no hulls");
    const int d = ground.dim();
    const int nh = static_cast<int>(hulls.size());
    std::vector<int> active = {0};
    std::vector<char> in_active(nh, 0);
    in_active[0] = 1;
    HullIntersection out;
    for (;;) {
        std::vector<std::vector<int>> act;
        act.reserve(active.size());
        for (int a : active) act.push_back(hulls[a]);
        LinearSystem sub = hull_intersection_system(ground, act);
        Verdict v = solve_feasibility(sub);
        if (!v) {
            // Lift onto the full joint row layout with zero multipliers.
            int rows = nh * (d + 1);
            Vec lam(rows, Rat(0));
            for (std::size_t k = 0; k < active.size(); ++k)
                for (int c = 0; c <= d; ++c)
                    lam[active[k] * (d + 1) + c] = v.cert().multipliers[k * (d + 1) + c];
            out.cert = InfeasCert{std::move(lam)};
            if (!verify_hull_infeasibility(ground, hulls, *out.cert))
                throw Error("internal: lifted hull certificate failed verification");
            return out;
        }
        Vec p(v.witness().assignment.begin(), v.witness().assignment.begin() + d);
        std::vector<Vec> coeffs(nh);
        int off = d;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const int sz = static_cast<int>(hulls[active[k]].size());
            coeffs[active[k]] = Vec(v.witness().assignment.begin() + off,
                                    v.witness().assignment.begin() + off + sz);
            off += sz;
        }
        int violated = -1;
        for (int h = 0; h < nh && violated < 0; ++h) {
            if (in_active[h]) continue;
            Verdict mem = lp::in_convex_hull(p, ground, hulls[h]);
            if (mem)
                coeffs[h] = mem.witness().assignment;
            else
                violated = h;
        }
        if (violated < 0) {
            out.point = std::move(p);
            out.coeffs = std::move(coeffs);
            return out;
        }
        active.push_back(violated);
        in_active[violated] = 1;
        std::sort(active.begin(), active.end());
    }
}

} // namespace tverberg::lp
