#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lamplight/error.hpp"

namespace lamplight {

/// Bitset over vertex indices of some ambient graph.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
/// Bitset over edge indices of some ambient graph.
using EdgeSet = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<int> set_members(const boost::dynamic_bitset<std::uint64_t>& s) {
    std::vector<int> out;
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

/// Finite undirected simple graph. Vertices are dense indices 0..n-1 with a
/// label table for display/interchange. Immutable after construction; the
/// all-pairs distance table is built eagerly for |V| <= 4096 (every
/// downstream operation is distance-hungry), larger graphs answer dist()
/// with a per-call BFS.
class Graph {
public:
    static constexpr int kEagerDistLimit = 4096;

    Graph() = default;

    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edge_list)
        : labels_(std::move(labels)) {
        const int n = static_cast<int>(labels_.size());
        require(n > 0, Errc::invalid_parameter, "graph needs at least one vertex");
        index_.reserve(labels_.size());
        for (int v = 0; v < n; ++v) {
            auto [it, fresh] = index_.emplace(labels_[v], v);
            require(fresh, Errc::invalid_parameter, "duplicate vertex label '" + labels_[v] + "'");
        }
        adj_.assign(n, {});
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            require(u >= 0 && u < n && v >= 0 && v < n, Errc::unknown_vertex,
                    "edge endpoint out of range");
            require(u != v, Errc::invalid_parameter, "loop at vertex '" + labels_[u] + "'");
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
                Errc::invalid_parameter, "multiple edge");
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [u, v] = edges_[e];
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            edge_index_.emplace(key(u, v), e);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        if (n <= kEagerDistLimit) build_distance_table();
    }

    static Graph from_labelled_edges(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& edges) {
        std::unordered_map<std::string, int> idx;
        for (int v = 0; v < static_cast<int>(labels.size()); ++v) idx.emplace(labels[v], v);
        std::vector<std::pair<int, int>> list;
        list.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            auto ia = idx.find(a), ib = idx.find(b);
            require(ia != idx.end(), Errc::unknown_vertex, "edge endpoint '" + a + "'");
            require(ib != idx.end(), Errc::unknown_vertex, "edge endpoint '" + b + "'");
            list.emplace_back(ia->second, ib->second);
        }
        return Graph(std::move(labels), list);
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int vertex(const std::string& lbl) const {
        auto it = index_.find(lbl);
        require(it != index_.end(), Errc::unknown_vertex, "no vertex labelled '" + lbl + "'");
        return it->second;
    }
    bool has_vertex(const std::string& lbl) const { return index_.count(lbl) != 0; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edge_index_.count(key(u, v)) != 0;
    }

    /// Edges in canonical order: endpoint pairs (u,v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_index_.find(key(u, v));
        return it == edge_index_.end() ? -1 : it->second;
    }
    std::pair<int, int> edge_endpoints(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    bool connected() const {
        if (has_table_) {
            for (int v = 0; v < vertex_count(); ++v)
                if (table_at(0, v) < 0) return false;
            return true;
        }
        auto d = bfs_from(0);
        return std::find(d.begin(), d.end(), -1) == d.end();
    }

    /// BFS hop counts from s; -1 marks unreachable vertices.
    std::vector<int> bfs_from(int s) const {
        std::vector<int> dist(labels_.size(), -1);
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    int dist(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        int d;
        if (has_table_) {
            d = table_at(u, v);
        } else {
            d = bfs_from(u)[static_cast<std::size_t>(v)];
        }
        require(d >= 0, Errc::not_connected,
                "no path from '" + label(u) + "' to '" + label(v) + "'");
        return d;
    }

    /// Full all-pairs table (row-major); unreachable pairs are -1.
    std::vector<std::vector<int>> all_pairs() const {
        std::vector<std::vector<int>> out;
        out.reserve(labels_.size());
        for (int v = 0; v < vertex_count(); ++v) {
            if (has_table_) {
                std::vector<int> row(labels_.size());
                for (int w = 0; w < vertex_count(); ++w) row[static_cast<std::size_t>(w)] = table_at(v, w);
                out.push_back(std::move(row));
            } else {
                out.push_back(bfs_from(v));
            }
        }
        return out;
    }

    int diameter() const {
        int best = 0;
        for (int v = 0; v < vertex_count(); ++v) {
            auto row = has_table_ ? std::vector<int>() : bfs_from(v);
            for (int w = 0; w < vertex_count(); ++w) {
                int d = has_table_ ? table_at(v, w) : row[static_cast<std::size_t>(w)];
                require(d >= 0, Errc::not_connected, "diameter of a disconnected graph");
                best = std::max(best, d);
            }
        }
        return best;
    }

    bool has_distance_table() const { return has_table_; }

    VertexSet empty_vertex_set() const { return VertexSet(static_cast<std::size_t>(vertex_count())); }
    EdgeSet empty_edge_set() const { return EdgeSet(static_cast<std::size_t>(std::max(edge_count(), 1))); }

    VertexSet vertex_set_of(const std::vector<int>& vs) const {
        VertexSet s = empty_vertex_set();
        for (int v : vs) {
            check_vertex(v);
            s.set(static_cast<std::size_t>(v));
        }
        return s;
    }

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    void check_vertex(int v) const {
        require(v >= 0 && v < vertex_count(), Errc::unknown_vertex,
                "vertex index " + std::to_string(v) + " out of range");
    }

    void build_distance_table() {
        const auto n = labels_.size();
        table_.assign(n * n, -1);
        for (std::size_t s = 0; s < n; ++s) {
            auto row = bfs_from(static_cast<int>(s));
            for (std::size_t t = 0; t < n; ++t)
                table_[s * n + t] = static_cast<std::int32_t>(row[t]);
        }
        has_table_ = true;
    }

    int table_at(int u, int v) const {
        return table_[static_cast<std::size_t>(u) * labels_.size() + static_cast<std::size_t>(v)];
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_map<std::uint64_t, int> edge_index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::int32_t> table_;
    bool has_table_ = false;
};

struct PointedGraph {
    Graph graph;
    int basepoint = 0;

    PointedGraph() = default;
    PointedGraph(Graph g, int bp) : graph(std::move(g)), basepoint(bp) {
        require(bp >= 0 && bp < graph.vertex_count(), Errc::unknown_vertex,
                "basepoint out of range");
    }
};

/// A walk: nonempty vertex sequence with consecutive entries adjacent.
struct Walk {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool visits(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }
};

inline bool is_walk_in(const Graph& g, const Walk& w) {
    if (w.vertices.empty()) return false;
    for (std::size_t i = 1; i < w.vertices.size(); ++i)
        if (!g.adjacent(w.vertices[i - 1], w.vertices[i])) return false;
    return true;
}

/// Cartesian product graph: (x,y)~(v,z) iff x=v and yz an edge, or y=z and
/// xv an edge. d((x,y),(v,z)) = d_G(x,v) + d_H(y,z).
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int n = g.vertex_count(), m = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
    auto id = [m](int i, int j) { return i * m + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (auto [a, b] : h.edges())
            edges.emplace_back(id(i, a), id(i, b));
    for (auto [a, b] : g.edges())
        for (int j = 0; j < m; ++j)
            edges.emplace_back(id(a, j), id(b, j));
    return Graph(std::move(labels), edges);
}

/// Vertex-coalescence G1 * G2: glue the two pointed graphs at their
/// basepoints. Side-1 labels survive unchanged (the shared vertex keeps G1's
/// basepoint label); side-2 non-basepoint labels get an "@2" suffix.
struct Coalescence {
    PointedGraph pointed;
    std::vector<int> from1, from2; // original index -> coalesced index
    std::vector<int> to1, to2;     // coalesced index -> original index, -1 if other side

    bool in_side1(int v) const { return to1[static_cast<std::size_t>(v)] >= 0; }
    bool in_side2(int v) const { return to2[static_cast<std::size_t>(v)] >= 0; }
};

inline Coalescence coalesce(const PointedGraph& g1, const PointedGraph& g2) {
    require(g1.graph.connected(), Errc::not_connected, "coalesce: first graph disconnected");
    require(g2.graph.connected(), Errc::not_connected, "coalesce: second graph disconnected");
    const int n1 = g1.graph.vertex_count(), n2 = g2.graph.vertex_count();

    Coalescence out;
    out.from1.assign(static_cast<std::size_t>(n1), -1);
    out.from2.assign(static_cast<std::size_t>(n2), -1);

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n1 + n2 - 1));
    for (int v = 0; v < n1; ++v) {
        out.from1[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(g1.graph.label(v));
    }
    for (int v = 0; v < n2; ++v) {
        if (v == g2.basepoint) {
            out.from2[static_cast<std::size_t>(v)] = out.from1[static_cast<std::size_t>(g1.basepoint)];
            continue;
        }
        out.from2[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(g2.graph.label(v) + "@2");
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g1.graph.edges())
        edges.emplace_back(out.from1[static_cast<std::size_t>(u)], out.from1[static_cast<std::size_t>(v)]);
    for (auto [u, v] : g2.graph.edges())
        edges.emplace_back(out.from2[static_cast<std::size_t>(u)], out.from2[static_cast<std::size_t>(v)]);

    const int total = static_cast<int>(labels.size());
    out.pointed = PointedGraph(Graph(std::move(labels), edges), out.from1[static_cast<std::size_t>(g1.basepoint)]);
    out.to1.assign(static_cast<std::size_t>(total), -1);
    out.to2.assign(static_cast<std::size_t>(total), -1);
    for (int v = 0; v < n1; ++v) out.to1[static_cast<std::size_t>(out.from1[static_cast<std::size_t>(v)])] = v;
    for (int v = 0; v < n2; ++v) out.to2[static_cast<std::size_t>(out.from2[static_cast<std::size_t>(v)])] = v;
    return out;
}

/// Clover Clo(G,n): n copies of a pointed graph coalesced at the basepoint.
/// Copies are indexed 0..n-1; copy c's non-basepoint labels get "@c".
struct Clover {
    PointedGraph pointed;
    std::vector<std::vector<int>> from_copy; // [copy][original index] -> clover index
    std::vector<int> copy_of;                // clover index -> copy, -1 for the center
    std::vector<int> orig_of;                // clover index -> original index (center -> basepoint)
};

inline Clover build_clover(const PointedGraph& g, int n) {
    require(n >= 1, Errc::invalid_parameter, "clover needs n >= 1");
    require(g.graph.connected(), Errc::not_connected, "clover of a disconnected graph");
    const int m = g.graph.vertex_count();

    Clover out;
    out.from_copy.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), -1));

    std::vector<std::string> labels;
    labels.push_back(g.graph.label(g.basepoint)); // shared center is index 0
    out.copy_of.push_back(-1);
    out.orig_of.push_back(g.basepoint);
    for (int c = 0; c < n; ++c) {
        out.from_copy[static_cast<std::size_t>(c)][static_cast<std::size_t>(g.basepoint)] = 0;
        for (int v = 0; v < m; ++v) {
            if (v == g.basepoint) continue;
            out.from_copy[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
            labels.push_back(g.graph.label(v) + "@" + std::to_string(c));
            out.copy_of.push_back(c);
            out.orig_of.push_back(v);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < n; ++c)
        for (auto [u, v] : g.graph.edges())
            edges.emplace_back(out.from_copy[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)],
                               out.from_copy[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]);

    out.pointed = PointedGraph(Graph(std::move(labels), edges), 0);
    return out;
}

} // namespace lamplight
