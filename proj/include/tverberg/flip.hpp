#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tverberg/lp.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/point_set.hpp"
#include "tverberg/regions.hpp"

namespace tverberg {

/// Ordered Radon pair at the session's fixed point y: disjoint nonempty
/// index sets whose hulls both contain y.
struct RadonState {
    std::vector<int> a;
    std::vector<int> b;

    RadonState swapped() const { return {b, a}; }
    bool operator==(const RadonState& o) const { return a == o.a && b == o.b; }
    bool operator<(const RadonState& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct FlipMove {
    bool add;    // add vs remove
    bool side_a; // acting on a vs b
    int index;

    bool operator==(const FlipMove& o) const {
        return add == o.add && side_a == o.side_a && index == o.index;
    }
};

/// Walk through the flip graph: consecutive states differ by exactly one
/// move, every state is a valid Radon pair at y.
struct FlipPath {
    std::vector<RadonState> states;
    std::vector<FlipMove> moves;

    int length() const { return static_cast<int>(moves.size()); }
};

/// Fixes the ground set and the point y, memoizing hull membership queries
/// by index-set bitmask (the flip graph asks the same ones over and over).
class FlipSession {
public:
    FlipSession(PointSetPtr s, Vec y) : s_(std::move(s)), y_(std::move(y)) {
        if (static_cast<int>(y_.size()) != s_->dim()) throw Error("flip point has wrong dimension");
        if (s_->size() > 63) throw Error("flip sessions support at most 63 points");
    }

    const PointSet& ground() const { return *s_; }
    PointSetPtr ground_ptr() const { return s_; }
    const Vec& y() const { return y_; }

    bool hull_contains(const std::vector<int>& idxs) const {
        unsigned long long mask = 0;
        for (int i : idxs) mask |= 1ULL << i;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        bool in = static_cast<bool>(lp::in_convex_hull(y_, *s_, idxs));
        memo_.emplace(mask, in);
        return in;
    }

    bool state_valid(const RadonState& st) const {
        if (st.a.empty() || st.b.empty()) return false;
        std::vector<char> used(s_->size(), 0);
        for (int i : st.a) {
            if (i < 0 || i >= s_->size() || used[i]) return false;
            used[i] = 1;
        }
        for (int i : st.b) {
            if (i < 0 || i >= s_->size() || used[i]) return false;
            used[i] = 1;
        }
        for (std::size_t k = 1; k < st.a.size(); ++k)
            if (st.a[k - 1] >= st.a[k]) return false;
        for (std::size_t k = 1; k < st.b.size(); ++k)
            if (st.b[k - 1] >= st.b[k]) return false;
        return hull_contains(st.a) && hull_contains(st.b);
    }

    /// All states one legal move away, in canonical order: additions to a,
    /// additions to b (always legal on used/unused grounds alone, since
    /// hulls only grow), then removals from a and from b (hull re-checked).
    std::vector<std::pair<RadonState, FlipMove>> neighbors(const RadonState& st) const {
        std::vector<char> used(s_->size(), 0);
        for (int i : st.a) used[i] = 1;
        for (int i : st.b) used[i] = 1;
        std::vector<std::pair<RadonState, FlipMove>> out;
        for (int i = 0; i < s_->size(); ++i) {
            if (used[i]) continue;
            RadonState ns = st;
            ns.a.insert(std::lower_bound(ns.a.begin(), ns.a.end(), i), i);
            out.push_back({std::move(ns), FlipMove{true, true, i}});
        }
        for (int i = 0; i < s_->size(); ++i) {
            if (used[i]) continue;
            RadonState ns = st;
            ns.b.insert(std::lower_bound(ns.b.begin(), ns.b.end(), i), i);
            out.push_back({std::move(ns), FlipMove{true, false, i}});
        }
        if (st.a.size() > 1) {
            for (int i : st.a) {
                RadonState ns = st;
                ns.a.erase(std::find(ns.a.begin(), ns.a.end(), i));
                if (hull_contains(ns.a)) out.push_back({std::move(ns), FlipMove{false, true, i}});
            }
        }
        if (st.b.size() > 1) {
            for (int i : st.b) {
                RadonState ns = st;
                ns.b.erase(std::find(ns.b.begin(), ns.b.end(), i));
                if (hull_contains(ns.b)) out.push_back({std::move(ns), FlipMove{false, false, i}});
            }
        }
        return out;
    }

private:
    PointSetPtr s_;
    Vec y_;
    mutable std::map<unsigned long long, bool> memo_;
};

/// One-shot neighbor query (sessionless convenience).
inline std::vector<RadonState> flip_neighbors(const RadonState& st, PointSetPtr s, const Vec& y) {
    FlipSession session(std::move(s), y);
    if (!session.state_valid(st)) throw Error("flip state is not a valid Radon pair at y");
    std::vector<RadonState> out;
    for (auto& [ns, mv] : session.neighbors(st)) out.push_back(std::move(ns));
    return out;
}

enum class FlipOutcome {
    Found,    // a path to the swapped pair exists and is returned
    NoPath,   // the start's component provably excludes the swapped pair
    Exhausted // the state budget ran out before the component was explored
};

struct FlipSearchResult {
    FlipOutcome outcome = FlipOutcome::NoPath;
    std::optional<FlipPath> path;
    long states_expanded = 0;
};

/// Breadth-first search from `start` to its swap (b, a): shortest path,
/// deterministic tie-break via the canonical neighbor order.
inline FlipSearchResult find_flip_path(FlipSession& session, const RadonState& start,
                                       long state_budget = 200000) {
    if (!session.state_valid(start)) throw Error("flip start is not a valid Radon pair at y");
    const RadonState target = start.swapped();
    FlipSearchResult res;
    std::map<RadonState, std::pair<RadonState, FlipMove>> parent;
    std::deque<RadonState> queue;
    std::map<RadonState, char> seen;
    seen[start] = 1;
    queue.push_back(start);
    bool over_budget = false;
    while (!queue.empty()) {
        RadonState cur = queue.front();
        queue.pop_front();
        ++res.states_expanded;
        if (cur == target) {
            FlipPath path;
            RadonState walk = cur;
            std::vector<std::pair<RadonState, FlipMove>> rev;
            while (!(walk == start)) {
                auto& [prev, mv] = parent.at(walk);
                rev.push_back({walk, mv});
                walk = prev;
            }
            path.states.push_back(start);
            for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
                path.moves.push_back(it->second);
                path.states.push_back(it->first);
            }
            res.outcome = FlipOutcome::Found;
            res.path = std::move(path);
            return res;
        }
        if (res.states_expanded >= state_budget) {
            over_budget = true;
            break;
        }
        for (auto& [ns, mv] : session.neighbors(cur)) {
            if (seen.count(ns)) continue;
            seen[ns] = 1;
            parent.emplace(ns, std::make_pair(cur, mv));
            queue.push_back(ns);
        }
    }
    res.outcome = over_budget ? FlipOutcome::Exhausted : FlipOutcome::NoPath;
    return res;
}

inline FlipSearchResult find_flip_path(PointSetPtr s, const Vec& y, const RadonState& start,
                                       long state_budget = 200000) {
    FlipSession session(std::move(s), y);
    return find_flip_path(session, start, state_budget);
}

/// Full certification of a path: every state is a valid Radon pair at y,
/// consecutive states differ by exactly the recorded move, and the endpoints
/// are mutual swaps.
inline bool verify_path(const FlipPath& path, PointSetPtr s, const Vec& y) {
    if (path.states.empty() || path.states.size() != path.moves.size() + 1) return false;
    FlipSession session(std::move(s), y);
    for (const RadonState& st : path.states)
        if (!session.state_valid(st)) return false;
    for (std::size_t k = 0; k < path.moves.size(); ++k) {
        const FlipMove& mv = path.moves[k];
        RadonState expect = path.states[k];
        std::vector<int>& side = mv.side_a ? expect.a : expect.b;
        if (mv.add) {
            if (std::binary_search(side.begin(), side.end(), mv.index)) return false;
            side.insert(std::lower_bound(side.begin(), side.end(), mv.index), mv.index);
        } else {
            auto it = std::find(side.begin(), side.end(), mv.index);
            if (it == side.end()) return false;
            side.erase(it);
        }
        if (!(expect == path.states[k + 1])) return false;
    }
    return path.states.back() == path.states.front().swapped();
}

/// For every ground index, a path step at which it sits in neither side;
/// the full map certifies y in C^1_2(S). Each entry is re-verified by a
/// Tverberg check of the step's pair on the ground set minus that index.
inline std::map<int, int> core_certificate_from_path(const FlipPath& path, PointSetPtr s,
                                                     const Vec& y) {
    FlipSession session(s, y);
    std::map<int, int> out;
    for (int i = 0; i < s->size(); ++i) {
        int found = -1;
        for (std::size_t k = 0; k < path.states.size() && found < 0; ++k) {
            const RadonState& st = path.states[k];
            if (!std::binary_search(st.a.begin(), st.a.end(), i) &&
                !std::binary_search(st.b.begin(), st.b.end(), i))
                found = static_cast<int>(k);
        }
        if (found < 0)
            throw IndexNeverFree("index " + std::to_string(i + 1) + " is used at every step");
        // Re-verify: at that step, y stays a Radon point of S minus {x_i}.
        const RadonState& st = path.states[found];
        if (!session.hull_contains(st.a) || !session.hull_contains(st.b))
            throw Error("internal: certified state lost hull membership");
        std::vector<int> unassigned;
        for (int j = 0; j < s->size(); ++j) {
            if (j == i) continue;
            if (!std::binary_search(st.a.begin(), st.a.end(), j) &&
                !std::binary_search(st.b.begin(), st.b.end(), j))
                unassigned.push_back(j);
        }
        std::vector<int> un_with_i = unassigned;
        un_with_i.insert(std::lower_bound(un_with_i.begin(), un_with_i.end(), i), i);
        Partition p(s, {st.a, st.b}, un_with_i);
        if (!is_tverberg_partition(p))
            throw Error("internal: certified state fails the Tverberg re-check");
        out[i] = found;
    }
    return out;
}

/// Expands a sequence of set-level waypoints (each step a pure addition or a
/// pure removal on one side) into a single-move path, validating every
/// intermediate state.
inline FlipPath expand_set_path(FlipSession& session, const std::vector<RadonState>& waypoints) {
    if (waypoints.empty()) throw Error("no waypoints to expand");
    FlipPath path;
    path.states.push_back(waypoints.front());
    if (!session.state_valid(waypoints.front())) throw Error("invalid starting waypoint");
    for (std::size_t w = 1; w < waypoints.size(); ++w) {
        const RadonState& from = path.states.back();
        const RadonState& to = waypoints[w];
        bool on_a;
        if (from.b == to.b)
            on_a = true;
        else if (from.a == to.a)
            on_a = false;
        else
            throw Error("waypoint changes both sides at once");
        const std::vector<int>& fs = on_a ? from.a : from.b;
        const std::vector<int>& ts = on_a ? to.a : to.b;
        std::vector<int> added, removed;
        for (int i : ts)
            if (!std::binary_search(fs.begin(), fs.end(), i)) added.push_back(i);
        for (int i : fs)
            if (!std::binary_search(ts.begin(), ts.end(), i)) removed.push_back(i);
        if (!added.empty() && !removed.empty())
            throw Error("waypoint mixes additions and removals");
        for (int i : added) {
            RadonState ns = path.states.back();
            std::vector<int>& side = on_a ? ns.a : ns.b;
            side.insert(std::lower_bound(side.begin(), side.end(), i), i);
            if (!session.state_valid(ns)) throw Error("expanded state is not a valid Radon pair");
            path.moves.push_back(FlipMove{true, on_a, i});
            path.states.push_back(std::move(ns));
        }
        for (int i : removed) {
            RadonState ns = path.states.back();
            std::vector<int>& side = on_a ? ns.a : ns.b;
            side.erase(std::find(side.begin(), side.end(), i));
            if (!session.state_valid(ns)) throw Error("expanded state is not a valid Radon pair");
            path.moves.push_back(FlipMove{false, on_a, i});
            path.states.push_back(std::move(ns));
        }
    }
    return path;
}

/// The 6-waypoint flip sequence induced by a Tverberg 3-partition (A,B,C)
/// sharing the point y, expanded to single moves.
inline FlipPath path_from_three_partition(FlipSession& session, std::vector<int> a,
                                          std::vector<int> b, std::vector<int> c) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    auto merge = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> out;
        std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        return out;
    };
    std::vector<RadonState> wp = {
        {a, b},          {a, merge(b, c)}, {a, c}, {merge(a, b), c},
        {b, c},          {b, merge(a, c)}, {b, a},
    };
    return expand_set_path(session, wp);
}

/// The ten-point set in R^5: e_1..e_5 then f_i = -e_i - e_{i+2} (indices
/// mod 5). X_i = {e_i, e_{i+2}, f_i} all capture the origin, consecutive
/// X's are disjoint, yet no Tverberg 3-partition exists.
inline PointSetPtr counterexample_set() {
    const int d = 5;
    std::vector<Vec> pts;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) {
        Vec e(d, Rat(0));
        e[i] = 1;
        pts.push_back(std::move(e));
        labels.push_back("e" + std::to_string(i + 1));
    }
    for (int i = 0; i < d; ++i) {
        Vec f(d, Rat(0));
        f[i] = -1;
        f[(i + 2) % d] = -1;
        pts.push_back(std::move(f));
        labels.push_back("f" + std::to_string(i + 1));
    }
    return make_point_set(d, std::move(pts), std::move(labels));
}

/// 0-based index triples X_1..X_5 of the counterexample set.
inline std::vector<std::vector<int>> counterexample_triples() {
    std::vector<std::vector<int>> xs;
    for (int i = 0; i < 5; ++i) {
        std::vector<int> x = {i, (i + 2) % 5, 5 + i};
        std::sort(x.begin(), x.end());
        xs.push_back(std::move(x));
    }
    return xs;
}

struct PaperExampleReport {
    bool hulls_contain_origin = false;     // 0 in conv X_i for every i
    bool consecutive_disjoint = false;     // X_i and X_{i+1} share no point
    bool flip_sequence_valid = false;      // the displayed sequence expands and verifies
    int flip_moves = 0;
    bool searched = false;                 // whether the two exhaustive checks ran
    bool no_three_partition = false;       // all 3-partitions refuted
    long three_partitions_refuted = 0;
    bool origin_in_core = false;           // 0 in C^1_2(S)
    std::map<int, int> free_step;          // per-index free step of the flip path

    bool all_ok() const {
        return hulls_contain_origin && consecutive_disjoint && flip_sequence_valid &&
               (!searched || (no_three_partition && origin_in_core));
    }
};

/// Runs the canonical checks on the ten-point set (or a caller-substituted
/// variant with the same index structure). The two exhaustive checks — the
/// 9330-partition refutation and the core membership — are gated behind
/// `run_search` since they dominate the runtime.
inline PaperExampleReport verify_paper_example(PointSetPtr s = nullptr, bool run_search = true) {
    if (!s) s = counterexample_set();
    const Vec origin(s->dim(), Rat(0));
    const auto xs = counterexample_triples();
    PaperExampleReport rep;
    FlipSession session(s, origin);
    rep.hulls_contain_origin = true;
    for (const auto& x : xs)
        if (!session.hull_contains(x)) rep.hulls_contain_origin = false;
    rep.consecutive_disjoint = true;
    for (int i = 0; i < 5 && rep.consecutive_disjoint; ++i) {
        std::vector<int> inter;
        const auto& x = xs[i];
        const auto& y = xs[(i + 1) % 5];
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(inter));
        if (!inter.empty()) rep.consecutive_disjoint = false;
    }
    if (rep.hulls_contain_origin) {
        auto merge = [](const std::vector<int>& x, const std::vector<int>& y) {
            std::vector<int> out;
            std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
            return out;
        };
        try {
            std::vector<RadonState> wp = {
                {xs[0], xs[1]}, {merge(xs[0], xs[2]), xs[1]}, {xs[2], xs[1]},
                {xs[2], merge(xs[1], xs[3])}, {xs[2], xs[3]},
                {merge(xs[2], xs[4]), xs[3]}, {xs[4], xs[3]},
                {xs[4], merge(xs[3], xs[0])}, {xs[4], xs[0]},
                {merge(xs[4], xs[1]), xs[0]}, {xs[1], xs[0]},
            };
            FlipPath path = expand_set_path(session, wp);
            rep.flip_sequence_valid = verify_path(path, s, origin);
            rep.flip_moves = path.length();
            if (rep.flip_sequence_valid && run_search)
                rep.free_step = core_certificate_from_path(path, s, origin);
        } catch (const Error&) {
            rep.flip_sequence_valid = false;
        }
    }
    if (run_search) {
        rep.searched = true;
        TverbergSearch search = tverberg_exists(s, 3);
        rep.no_three_partition = !search.witness.has_value();
        rep.three_partitions_refuted = search.refuted_certified;
        rep.origin_in_core = core_member(origin, s, 2, 1);
    }
    return rep;
}

} // namespace tverberg
