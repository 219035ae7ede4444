#pragma once

#include <limits>
#include <vector>

#include "lamplight/graph.hpp"
#include "lamplight/tree.hpp"

namespace lamplight {

/// Walk-TSP instance: shortest walk from `start` to `end` visiting every
/// vertex of `targets` (vertex repetition allowed, open walk not a tour).
struct TspInstance {
    const Graph* graph = nullptr;
    int start = 0;
    VertexSet targets;
    int end = 0;
};

constexpr int kTspTargetCap = 15;        // Held-Karp table: 2^15 * 15^2
constexpr int kCoalescenceTargetCap = 12;

/// Held-Karp over the shortest-path metric, solved for *every* subset of
/// `targets` at once: result[S] is the length of a shortest walk from x to y
/// visiting { targets[i] : bit i of S }. An optimal visiting walk decomposes
/// into geodesic segments between consecutive required vertices, so the DP
/// over pairwise distances is exact.
inline std::vector<int> subset_tsp_table(const Graph& g, int x, const std::vector<int>& targets,
                                         int y) {
    const int m = static_cast<int>(targets.size());
    require(m <= kTspTargetCap, Errc::instance_too_large,
            "walk-TSP engine capped at " + std::to_string(kTspTargetCap) + " targets");
    constexpr int kInf = std::numeric_limits<int>::max() / 4;

    std::vector<int> to_start(targets.size()), to_end(targets.size());
    std::vector<std::vector<int>> between(targets.size(), std::vector<int>(targets.size()));
    for (int i = 0; i < m; ++i) {
        to_start[static_cast<std::size_t>(i)] = g.dist(x, targets[static_cast<std::size_t>(i)]);
        to_end[static_cast<std::size_t>(i)] = g.dist(targets[static_cast<std::size_t>(i)], y);
        for (int j = 0; j < m; ++j)
            between[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                g.dist(targets[static_cast<std::size_t>(i)], targets[static_cast<std::size_t>(j)]);
    }

    const std::size_t full = std::size_t{1} << m;
    std::vector<int> result(full, kInf);
    result[0] = g.dist(x, y);
    if (m == 0) return result;

    // dp[S * m + i]: shortest x -> targets[i] visiting exactly set S (i in S)
    std::vector<int> dp(full * static_cast<std::size_t>(m), kInf);
    for (int i = 0; i < m; ++i)
        dp[(std::size_t{1} << i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i)] =
            to_start[static_cast<std::size_t>(i)];
    for (std::size_t s = 1; s < full; ++s) {
        int best_close = kInf;
        for (int i = 0; i < m; ++i) {
            if (!(s >> i & 1)) continue;
            const int di = dp[s * static_cast<std::size_t>(m) + static_cast<std::size_t>(i)];
            if (di >= kInf) continue;
            best_close = std::min(best_close, di + to_end[static_cast<std::size_t>(i)]);
            for (int j = 0; j < m; ++j) {
                if (s >> j & 1) continue;
                const std::size_t s2 = s | (std::size_t{1} << j);
                int& slot = dp[s2 * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
                slot = std::min(slot, di + between[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            }
        }
        result[s] = best_close;
    }
    return result;
}

/// tsp_G(x, C, y) for an arbitrary connected graph. Targets equal to x or y
/// are dropped before the DP (a walk always visits its endpoints).
inline int tsp_generic(const Graph& g, int x, const VertexSet& targets, int y) {
    std::vector<int> c;
    for (auto v = targets.find_first(); v != VertexSet::npos; v = targets.find_next(v))
        if (static_cast<int>(v) != x && static_cast<int>(v) != y) c.push_back(static_cast<int>(v));
    auto table = subset_tsp_table(g, x, c, y);
    return table.back();
}

inline int tsp_generic(const TspInstance& inst) {
    return tsp_generic(*inst.graph, inst.start, inst.targets, inst.end);
}

/// Closed form on trees: tsp_T(x, A, y) = 2|[x,A] \ [x,y]| + |[x,y]|.
inline int tsp_tree(const Graph& t, int x, const VertexSet& targets, int y) {
    require_tree(t);
    RootedTree rt(t, x);
    EdgeSet reach = t.empty_edge_set();
    for (auto a = targets.find_first(); a != VertexSet::npos; a = targets.find_next(a))
        rt.add_path_edges(x, static_cast<int>(a), reach);
    EdgeSet direct = rt.path_edges(x, y);
    return 2 * static_cast<int>((reach - direct).count()) + static_cast<int>(direct.count());
}

namespace detail {

/// Targets of A lying in each subtree hanging off x, keyed by the neighbour
/// owning the subtree, ascending. x itself is never included.
inline std::vector<std::pair<int, VertexSet>> split_targets(const RootedTree& rt, int x,
                                                            const VertexSet& targets) {
    const Graph& t = *rt.tree;
    std::vector<std::pair<int, VertexSet>> parts;
    for (auto a = targets.find_first(); a != VertexSet::npos; a = targets.find_next(a)) {
        if (static_cast<int>(a) == x) continue;
        int w = static_cast<int>(a);
        while (rt.parent[static_cast<std::size_t>(w)] != x) w = rt.parent[static_cast<std::size_t>(w)];
        bool found = false;
        for (auto& [nb, set] : parts)
            if (nb == w) {
                set.set(a);
                found = true;
            }
        if (!found) {
            parts.emplace_back(w, t.empty_vertex_set());
            parts.back().second.set(a);
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return parts;
}

inline void tree_walk_round(const Graph& t, int x, const VertexSet& targets, std::vector<int>& out);

inline void tree_walk_to(const Graph& t, int x, const VertexSet& targets, int y,
                         std::vector<int>& out) {
    if (x == y) {
        tree_walk_round(t, x, targets, out);
        return;
    }
    RootedTree rt(t, x);
    // first step x1 toward y; A splits into the part behind x (round trip
    // first) and the part ahead (handled on the way)
    int x1 = y;
    while (rt.parent[static_cast<std::size_t>(x1)] != x) x1 = rt.parent[static_cast<std::size_t>(x1)];
    VertexSet behind = t.empty_vertex_set(), ahead = t.empty_vertex_set();
    for (auto& [nb, set] : split_targets(rt, x, targets)) {
        if (nb == x1)
            ahead |= set;
        else
            behind |= set;
    }
    tree_walk_round(t, x, behind, out);
    out.push_back(x1);
    tree_walk_to(t, x1, ahead, y, out);
}

inline void tree_walk_round(const Graph& t, int x, const VertexSet& targets,
                            std::vector<int>& out) {
    if (targets.none()) return;
    RootedTree rt(t, x);
    for (auto& [nb, set] : split_targets(rt, x, targets)) {
        out.push_back(nb);
        tree_walk_round(t, nb, set, out);
        out.push_back(x);
    }
}

} // namespace detail

/// An optimal visiting walk on a tree, built by the pre-order traversal with
/// backtracking. Sibling subtrees are visited in ascending vertex order.
/// The walk starts at x, ends at y, visits all of A and has length exactly
/// tsp_tree(t, x, A, y).
inline Walk tsp_tree_walk(const Graph& t, int x, const VertexSet& targets, int y) {
    require_tree(t);
    std::vector<int> out{x};
    detail::tree_walk_to(t, x, targets, y, out);
    return Walk{std::move(out)};
}

/// Walk-TSP on a coalescence, via the three-case decomposition. x, targets
/// and y are vertices of co.pointed.graph.
inline int tsp_coalescence(const PointedGraph& g1, const PointedGraph& g2, const Coalescence& co,
                           int x, const VertexSet& targets, int y) {
    const int center = co.pointed.basepoint;
    const int bp1 = g1.basepoint, bp2 = g2.basepoint;

    VertexSet c1 = g1.graph.empty_vertex_set(), c2 = g2.graph.empty_vertex_set();
    bool strict1 = false, strict2 = false; // targets strictly inside a side
    for (auto v = targets.find_first(); v != VertexSet::npos; v = targets.find_next(v)) {
        int o1 = co.to1[v], o2 = co.to2[v];
        if (o1 >= 0) c1.set(static_cast<std::size_t>(o1));
        if (o2 >= 0) c2.set(static_cast<std::size_t>(o2));
        if (static_cast<int>(v) != center) (o1 >= 0 ? strict1 : strict2) = true;
    }
    require(static_cast<int>(c1.count()) <= kCoalescenceTargetCap &&
                static_cast<int>(c2.count()) <= kCoalescenceTargetCap,
            Errc::instance_too_large, "coalescence decomposition capped at " +
                                          std::to_string(kCoalescenceTargetCap) +
                                          " targets per side");

    const bool x1 = co.in_side1(x), x2 = co.in_side2(x);
    const bool y1 = co.in_side1(y), y2 = co.in_side2(y);

    // same side, all targets on that side too
    if (x1 && y1 && !strict2) return tsp_generic(g1.graph, co.to1[x], c1, co.to1[y]);
    if (x2 && y2 && !strict1) return tsp_generic(g2.graph, co.to2[x], c2, co.to2[y]);

    // endpoints on opposite sides: pass through the basepoint once
    if (x1 && y2)
        return tsp_generic(g1.graph, co.to1[x], c1, bp1) + tsp_generic(g2.graph, bp2, c2, co.to2[y]);
    if (x2 && y1)
        return tsp_generic(g2.graph, co.to2[x], c2, bp2) + tsp_generic(g1.graph, bp1, c1, co.to1[y]);

    // endpoints on side i, targets also on the other side: detour through the
    // basepoint, minimizing over 2-colourings of the side-i targets (tsp is
    // monotone in the target set, so disjoint partitions suffice)
    auto far_case = [&](const PointedGraph& ga, const VertexSet& ca, int xa, int ya,
                        const PointedGraph& gb, const VertexSet& cb) {
        int mid = tsp_generic(gb.graph, gb.basepoint, cb, gb.basepoint);
        std::vector<int> members = set_members(ca);
        auto out_leg = subset_tsp_table(ga.graph, xa, members, ga.basepoint);
        auto back_leg = subset_tsp_table(ga.graph, ga.basepoint, members, ya);
        const std::size_t full = (std::size_t{1} << members.size()) - 1;
        int best = std::numeric_limits<int>::max();
        for (std::size_t s = 0; s <= full; ++s)
            best = std::min(best, out_leg[s] + mid + back_leg[full & ~s]);
        return best;
    };
    if (x1 && y1) return far_case(g1, c1, co.to1[x], co.to1[y], g2, c2);
    return far_case(g2, c2, co.to2[x], co.to2[y], g1, c1);
}

inline int tsp_coalescence(const PointedGraph& g1, const PointedGraph& g2, int x,
                           const VertexSet& targets, int y) {
    return tsp_coalescence(g1, g2, coalesce(g1, g2), x, targets, y);
}

} // namespace lamplight
