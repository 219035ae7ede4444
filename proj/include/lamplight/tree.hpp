#pragma once

#include <utility>
#include <vector>

#include "lamplight/graph.hpp"

namespace lamplight {

inline bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && g.connected();
}

inline void require_tree(const Graph& g) {
    require(is_tree(g), Errc::not_a_tree, "operation requires a tree");
}

/// Rooted view of a tree: parent pointers, depths and the edge index up to
/// the parent. The workhorse behind every [x,y] / [x,A] computation.
struct RootedTree {
    const Graph* tree = nullptr;
    std::vector<int> parent, depth, edge_up;

    RootedTree() = default;

    explicit RootedTree(const Graph& t, int root = 0) : tree(&t) {
        require_tree(t);
        const int n = t.vertex_count();
        parent.assign(static_cast<std::size_t>(n), -1);
        depth.assign(static_cast<std::size_t>(n), -1);
        edge_up.assign(static_cast<std::size_t>(n), -1);
        std::vector<int> stack{root};
        depth[static_cast<std::size_t>(root)] = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(u)) {
                if (depth[static_cast<std::size_t>(w)] >= 0) continue;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(w)] = u;
                edge_up[static_cast<std::size_t>(w)] = t.edge_index(u, w);
                stack.push_back(w);
            }
        }
    }

    int lca(int u, int v) const {
        while (u != v) {
            if (depth[static_cast<std::size_t>(u)] >= depth[static_cast<std::size_t>(v)])
                u = parent[static_cast<std::size_t>(u)];
            else
                v = parent[static_cast<std::size_t>(v)];
        }
        return u;
    }

    /// Adds the edges of the unique path from u to v into `out`.
    void add_path_edges(int u, int v, EdgeSet& out) const {
        int m = lca(u, v);
        for (int w = u; w != m; w = parent[static_cast<std::size_t>(w)])
            out.set(static_cast<std::size_t>(edge_up[static_cast<std::size_t>(w)]));
        for (int w = v; w != m; w = parent[static_cast<std::size_t>(w)])
            out.set(static_cast<std::size_t>(edge_up[static_cast<std::size_t>(w)]));
    }

    EdgeSet path_edges(int u, int v) const {
        EdgeSet s = tree->empty_edge_set();
        add_path_edges(u, v, s);
        return s;
    }

    /// Vertex sequence of the unique path from u to v.
    std::vector<int> path_vertices(int u, int v) const {
        int m = lca(u, v);
        std::vector<int> left, right;
        for (int w = u; w != m; w = parent[static_cast<std::size_t>(w)]) left.push_back(w);
        for (int w = v; w != m; w = parent[static_cast<std::size_t>(w)]) right.push_back(w);
        left.push_back(m);
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;
    }
};

/// The unique path p(x,y) in a tree.
inline Walk tree_path(const Graph& t, int x, int y) {
    RootedTree rt(t, x);
    return Walk{rt.path_vertices(x, y)};
}

/// [x,y]: edges on the unique path from x to y. |[x,y]| = d(x,y).
inline EdgeSet path_edge_set(const Graph& t, int x, int y) {
    RootedTree rt(t, x);
    return rt.path_edges(x, y);
}

/// [x,A] = union of [x,a] over a in A.
inline EdgeSet reach_edge_set(const Graph& t, int x, const VertexSet& targets) {
    RootedTree rt(t, x);
    EdgeSet s = t.empty_edge_set();
    for (auto a = targets.find_first(); a != VertexSet::npos; a = targets.find_next(a))
        rt.add_path_edges(x, static_cast<int>(a), s);
    return s;
}

/// [C] = union of [x,y] over x,y in C: the edge set of the minimal subtree
/// spanning C. Equals [c0, C] for any c0 in C.
inline EdgeSet span_edge_set(const Graph& t, const VertexSet& c) {
    auto c0 = c.find_first();
    if (c0 == VertexSet::npos) return t.empty_edge_set();
    return reach_edge_set(t, static_cast<int>(c0), c);
}

/// Splits T \ {x} into the subtrees T_{x,y} hanging off each neighbour y of
/// x; returned in ascending neighbour order. The sets partition T \ {x}.
inline std::vector<std::pair<int, VertexSet>> subtree_split(const Graph& t, int x) {
    require_tree(t);
    RootedTree rt(t, x);
    std::vector<std::pair<int, VertexSet>> out;
    for (int y : t.neighbors(x)) out.emplace_back(y, t.empty_vertex_set());
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v == x) continue;
        int w = v;
        while (rt.parent[static_cast<std::size_t>(w)] != x) w = rt.parent[static_cast<std::size_t>(w)];
        for (auto& [y, set] : out)
            if (y == w) set.set(static_cast<std::size_t>(v));
    }
    return out;
}

} // namespace lamplight
