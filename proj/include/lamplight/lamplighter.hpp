#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamplight/graph.hpp"
#include "lamplight/tsp.hpp"

namespace lamplight {

/// A lamplighter configuration over some base graph: the set of lit lamps
/// and the lamplighter's position.
struct LampState {
    VertexSet lamps;
    int pos = 0;

    friend bool operator==(const LampState&, const LampState&) = default;
};

inline LampState make_lamp_state(const Graph& g, const std::vector<int>& lit, int pos) {
    require(pos >= 0 && pos < g.vertex_count(), Errc::unknown_vertex, "lamp position out of range");
    return LampState{g.vertex_set_of(lit), pos};
}

inline std::string lamp_state_label(const Graph& g, const LampState& s) {
    std::string out = "{";
    bool first = true;
    for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v)) {
        if (!first) out += ",";
        out += g.label(static_cast<int>(v));
        first = false;
    }
    out += "}|" + g.label(s.pos);
    return out;
}

/// Closed formula for the lamplighter metric:
/// d((A,x),(B,y)) = tsp_G(x, A^B, y) + |A^B|.
inline int lamp_distance(const Graph& g, const LampState& u, const LampState& v) {
    VertexSet delta = u.lamps ^ v.lamps;
    return tsp_generic(g, u.pos, delta, v.pos) + static_cast<int>(delta.count());
}

/// Tree specialization: 2|[x, A^B] \ [x,y]| + |[x,y]| + |A^B|.
inline int lamp_distance_tree(const Graph& t, const LampState& u, const LampState& v) {
    VertexSet delta = u.lamps ^ v.lamps;
    return tsp_tree(t, u.pos, delta, v.pos) + static_cast<int>(delta.count());
}

constexpr int kExplicitLamplighterCap = 14; // output has |V| * 2^|V| vertices

/// Canonical dense index of a state in the explicit lamplighter graph:
/// lamp bitmask major, position minor.
inline int lamp_state_index(const Graph& g, const LampState& s) {
    const int n = g.vertex_count();
    std::uint64_t mask = 0;
    for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v))
        mask |= std::uint64_t{1} << v;
    return static_cast<int>(mask * static_cast<std::uint64_t>(n)) + s.pos;
}

inline LampState lamp_state_at(const Graph& g, int index) {
    const int n = g.vertex_count();
    std::uint64_t mask = static_cast<std::uint64_t>(index) / static_cast<std::uint64_t>(n);
    LampState s{g.empty_vertex_set(), index % n};
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.lamps.set(static_cast<std::size_t>(v));
    return s;
}

/// The explicit lamplighter graph La(G) in the walk/switch model: vertices
/// are all (A,x); edges are horizontal moves (A fixed, xy an edge of G) and
/// vertical moves (x fixed, A^B = {x}). Vertex order matches
/// lamp_state_index. A disconnected base is allowed; La(G) is then
/// disconnected as well.
inline Graph build_lamplighter_graph(const Graph& g) {
    const int n = g.vertex_count();
    require(n <= kExplicitLamplighterCap, Errc::too_large,
            "explicit lamplighter graph capped at " +
                std::to_string(kExplicitLamplighterCap) + " base vertices");
    const std::uint64_t masks = std::uint64_t{1} << n;

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(masks) * static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (int pos = 0; pos < n; ++pos) {
            std::string l = "{";
            bool first = true;
            for (int v = 0; v < n; ++v) {
                if (!(mask >> v & 1)) continue;
                if (!first) l += ",";
                l += g.label(v);
                first = false;
            }
            l += "}|" + g.label(pos);
            labels.push_back(std::move(l));
        }
    }

    auto id = [n](std::uint64_t mask, int pos) {
        return static_cast<int>(mask * static_cast<std::uint64_t>(n)) + pos;
    };
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (auto [u, v] : g.edges()) edges.emplace_back(id(mask, u), id(mask, v)); // horizontal
        for (int pos = 0; pos < n; ++pos) {
            const std::uint64_t flipped = mask ^ (std::uint64_t{1} << pos);
            if (flipped > mask) edges.emplace_back(id(mask, pos), id(flipped, pos)); // vertical
        }
    }
    return Graph(std::move(labels), edges);
}

} // namespace lamplight
