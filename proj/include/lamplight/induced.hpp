#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamplight/embeddings.hpp"
#include "lamplight/families.hpp"
#include "lamplight/graph.hpp"
#include "lamplight/lamplighter.hpp"
#include "lamplight/tsp.hpp"

namespace lamplight {

/// A vertex map f : G -> H together with two-sided bounds
/// a d_G <= d_H(f,f) <= b d_G it is claimed to satisfy.
struct GraphMap {
    Graph src, tgt;
    std::vector<int> image; // per src vertex
    double a = 0, b = 0;
};

/// Measures the actual (min ratio, max ratio) of a vertex map over all pairs.
inline std::pair<double, double> measure_map_bounds(const GraphMap& f) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (int x = 0; x < f.src.vertex_count(); ++x)
        for (int y = x + 1; y < f.src.vertex_count(); ++y) {
            double ratio = double(f.tgt.dist(f.image[static_cast<std::size_t>(x)],
                                             f.image[static_cast<std::size_t>(y)])) /
                           double(f.src.dist(x, y));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    return {lo, hi};
}

/// The plain induced map f-bar(A,x) = (f(A), f(x)) on lamplighter graphs.
/// Bounds become (min{1,a}, max{1,b}).
inline LampState induced_map(const GraphMap& f, const LampState& s) {
    LampState out{f.tgt.empty_vertex_set(), f.image[static_cast<std::size_t>(s.pos)]};
    for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v))
        out.lamps.set(static_cast<std::size_t>(f.image[v]));
    return out;
}

namespace detail {

/// First `steps` moves along the lexicographically-least geodesic from y
/// toward z, including y itself.
inline std::vector<int> lex_geodesic_prefix(const Graph& g, int y, int z, int steps) {
    std::vector<int> out{y};
    int u = y;
    for (int i = 0; i < steps; ++i) {
        int du = g.dist(u, z);
        int next = -1;
        for (int w : g.neighbors(u))
            if (g.dist(w, z) == du - 1) {
                next = w;
                break;
            }
        require(next >= 0, Errc::precondition_violation, "geodesic shorter than witness path");
        out.push_back(next);
        u = next;
    }
    return out;
}

} // namespace detail

/// f-bar_m: each image lamp y is replaced by a witness path W_y of m+1
/// vertices starting at y, rebalancing the vertical-move cost. Requires the
/// image vertices pairwise >= a apart and 0 <= m <= ceil(a/2)-1 so the W_y
/// stay disjoint. Bounds become (min{a, m+1}, max{b, 3m+1}).
struct InducedMapM {
    GraphMap f;
    int m;
    std::map<int, VertexSet> witness; // image vertex -> W_y

    InducedMapM(GraphMap base, int path_extent) : f(std::move(base)), m(path_extent) {
        const int max_m = static_cast<int>(std::ceil(f.a / 2.0)) - 1;
        require(m >= 0 && (m == 0 || m <= max_m), Errc::invalid_parameter,
                "m must lie in 0..ceil(a/2)-1");

        std::vector<int> images = f.image;
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        require(m == 0 || images.size() >= 2, Errc::precondition_violation,
                "witness paths need a second image vertex to aim at");

        for (int y : images) {
            int z = images[0] == y ? (images.size() > 1 ? images[1] : y) : images[0];
            auto path = m == 0 ? std::vector<int>{y} : detail::lex_geodesic_prefix(f.tgt, y, z, m);
            VertexSet w = f.tgt.empty_vertex_set();
            for (int v : path) w.set(static_cast<std::size_t>(v));
            witness.emplace(y, std::move(w));
        }
        if (2 * m < f.a) {
            VertexSet all = f.tgt.empty_vertex_set();
            for (auto& [y, w] : witness) {
                require((all & w).none(), Errc::precondition_violation,
                        "witness sets overlap");
                all |= w;
            }
        }
    }

    double bound_a() const { return std::min(f.a, double(m + 1)); }
    double bound_b() const { return std::max(f.b, double(3 * m + 1)); }

    LampState map(const LampState& s) const {
        LampState out{f.tgt.empty_vertex_set(), f.image[static_cast<std::size_t>(s.pos)]};
        for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v))
            out.lamps |= witness.at(f.image[v]);
        return out;
    }
};

/// Witness-gadget cost c = tsp_Q(v0, W, v0) + |W|.
inline int witness_cost(const PointedGraph& q, const VertexSet& w) {
    int tsp = is_tree(q.graph) ? tsp_tree(q.graph, q.basepoint, w, q.basepoint)
                               : tsp_generic(q.graph, q.basepoint, w, q.basepoint);
    return tsp + static_cast<int>(w.count());
}

struct WitnessGrowth {
    VertexSet w;
    int c = 0;
    std::vector<int> trace; // c after each growth step, starting at {v0}
};

/// Grows W from {v0} one adjacent vertex at a time until a <= c <= b. Each
/// step raises c by at most 3, so b - a >= 2 guarantees the window is hit;
/// |V(Q)| >= b guarantees we never run out of vertices first.
inline WitnessGrowth grow_witness_set(const PointedGraph& q, int a, int b) {
    require(a >= 1 && b - a >= 2, Errc::invalid_parameter, "need 1 <= a and b - a >= 2");
    require(q.graph.vertex_count() >= b, Errc::invalid_parameter, "need |V(Q)| >= b");
    require(q.graph.connected(), Errc::not_connected, "witness gadget must be connected");

    WitnessGrowth out;
    out.w = q.graph.empty_vertex_set();
    out.w.set(static_cast<std::size_t>(q.basepoint));
    out.c = witness_cost(q, out.w);
    out.trace.push_back(out.c);
    while (out.c < a) {
        int next = -1;
        for (auto v = out.w.find_first(); v != VertexSet::npos && next < 0;
             v = out.w.find_next(v))
            for (int nb : q.graph.neighbors(static_cast<int>(v)))
                if (!out.w.test(static_cast<std::size_t>(nb)) && (next < 0 || nb < next)) next = nb;
        require(next >= 0, Errc::invalid_parameter, "ran out of vertices growing W");
        out.w.set(static_cast<std::size_t>(next));
        out.c = witness_cost(q, out.w);
        out.trace.push_back(out.c);
    }
    require(out.c <= b, Errc::precondition_violation, "witness growth overshot b");
    return out;
}

/// f-tilde: coalesce a copy of the pointed gadget Q at every image vertex of
/// f and replace each image lamp by the marked set W inside its own copy.
/// Bounds become (min{a,c}, max{b,c}) with c = tsp_Q(v0,W,v0) + |W|.
struct InducedMapTilde {
    GraphMap f;
    PointedGraph q;
    VertexSet w; // subset of V(Q) containing the basepoint
    int c = 0;

    Graph extended;                           // H-tilde; base H keeps its indices
    std::map<int, std::vector<int>> copy_map; // image vertex -> (Q index -> extended index)

    InducedMapTilde(GraphMap base, PointedGraph gadget, VertexSet marked)
        : f(std::move(base)), q(std::move(gadget)), w(std::move(marked)) {
        require(q.graph.connected(), Errc::not_connected, "gadget must be connected");
        require(w.test(static_cast<std::size_t>(q.basepoint)), Errc::precondition_violation,
                "W must contain the gadget basepoint");
        c = witness_cost(q, w);

        std::vector<int> images = f.image;
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());

        std::vector<std::string> labels = f.tgt.labels();
        std::vector<std::pair<int, int>> edges = f.tgt.edges();
        for (int y : images) {
            std::vector<int> to_ext(static_cast<std::size_t>(q.graph.vertex_count()), -1);
            to_ext[static_cast<std::size_t>(q.basepoint)] = y;
            for (int v = 0; v < q.graph.vertex_count(); ++v) {
                if (v == q.basepoint) continue;
                to_ext[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
                labels.push_back(q.graph.label(v) + "@" + f.tgt.label(y));
            }
            for (auto [u, v] : q.graph.edges())
                edges.emplace_back(to_ext[static_cast<std::size_t>(u)], to_ext[static_cast<std::size_t>(v)]);
            copy_map.emplace(y, std::move(to_ext));
        }
        extended = Graph(std::move(labels), edges);
    }

    double bound_a() const { return std::min(f.a, double(c)); }
    double bound_b() const { return std::max(f.b, double(c)); }

    LampState map(const LampState& s) const {
        LampState out{extended.empty_vertex_set(), f.image[static_cast<std::size_t>(s.pos)]};
        for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v)) {
            const auto& to_ext = copy_map.at(f.image[v]);
            for (auto qv = w.find_first(); qv != VertexSet::npos; qv = w.find_next(qv))
                out.lamps.set(static_cast<std::size_t>(to_ext[qv]));
        }
        return out;
    }
};

/// La(K_k) -> La(B-tilde): the clique-into-leaves map composed with the
/// gadget-induced lift, Q = (B_r, root) with 2^r > 2(s+t) and W grown so
/// that c lands in [2t+2, 2(s+t)]. The target is a tree, so distances come
/// from the tree formula. Distortion at most (s+t)/(t+1). For k <= 2 the
/// clique embeds isometrically and the plain induced map is used.
struct LampCompleteToLampBinary {
    int k;
    double eps;
    CompleteToBinary base;
    int r = 0;
    std::optional<InducedMapTilde> tilde;
    std::optional<GraphMap> small_case;
    double bound_a = 1, bound_b = 1;

    LampCompleteToLampBinary(int clique, double eps_slack)
        : k(clique), eps(eps_slack), base(clique, eps_slack) {
        Graph complete = build_complete(k);
        if (k <= 2) {
            Graph b1 = build_binary_tree(1);
            std::vector<int> image{b1.vertex("")};
            if (k == 2) image.push_back(b1.vertex("0"));
            small_case = GraphMap{std::move(complete), std::move(b1), std::move(image), 1.0, 1.0};
            return;
        }
        Graph bn = build_binary_tree(base.height());
        std::vector<int> image;
        for (int v = 0; v < k; ++v) image.push_back(binary_word_index(base.map(v)));
        const int lo = 2 * base.t + 2, hi = 2 * (base.s + base.t);
        GraphMap f{std::move(complete), std::move(bn), std::move(image), double(lo), double(hi)};

        while ((1 << r) <= 2 * (base.s + base.t)) ++r;
        PointedGraph q(build_binary_tree(r), 0);
        auto growth = grow_witness_set(q, lo, hi);
        tilde.emplace(std::move(f), std::move(q), std::move(growth.w));
        bound_a = tilde->bound_a();
        bound_b = tilde->bound_b();
    }

    const Graph& domain_base() const { return small_case ? small_case->src : tilde->f.src; }
    const Graph& target_tree() const { return small_case ? small_case->tgt : tilde->extended; }

    LampState map(const LampState& s) const {
        return small_case ? induced_map(*small_case, s) : tilde->map(s);
    }

    double distortion_bound() const { return base.distortion_bound(); }
};

} // namespace lamplight
