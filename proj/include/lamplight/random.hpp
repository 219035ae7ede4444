#pragma once

#include <numeric>
#include <vector>

#include "lamplight/graph.hpp"
#include "lamplight/rng.hpp"

namespace lamplight {

/// Uniform random labelled tree on n vertices (Pruefer decode).
inline Graph random_tree(Rng& rng, int n) {
    require(n >= 1, Errc::invalid_parameter, "tree needs n >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    if (n == 2) edges.emplace_back(0, 1);
    if (n >= 3) {
        std::vector<int> seq(static_cast<std::size_t>(n - 2));
        for (auto& s : seq) s = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int s : seq) ++degree[static_cast<std::size_t>(s)];
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int s : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                    leaf = v;
                    break;
                }
            edges.emplace_back(leaf, s);
            used[static_cast<std::size_t>(leaf)] = true;
            --degree[static_cast<std::size_t>(s)];
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1)
                rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
    }
    return Graph(std::move(labels), edges);
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability 1/3.
inline Graph random_connected_graph(Rng& rng, int n) {
    Graph tree = random_tree(rng, n);
    std::vector<std::pair<int, int>> edges = tree.edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.adjacent(u, v) && bernoulli_in(rng, 1, 3)) edges.emplace_back(u, v);
    return Graph(tree.labels(), edges);
}

inline int random_vertex(Rng& rng, const Graph& g) {
    return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.vertex_count())));
}

/// Random vertex subset of size exactly `size` (distinct vertices).
inline VertexSet random_vertex_subset(Rng& rng, const Graph& g, int size) {
    const int n = g.vertex_count();
    require(size >= 0 && size <= n, Errc::invalid_parameter, "subset size out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    VertexSet out = g.empty_vertex_set();
    for (int i = 0; i < size; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        uniform_below(rng, static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        out.set(static_cast<std::size_t>(pool[static_cast<std::size_t>(i)]));
    }
    return out;
}

/// Random subset with size drawn uniformly from 0..max_size.
inline VertexSet random_vertex_subset_up_to(Rng& rng, const Graph& g, int max_size) {
    int cap = std::min(max_size, g.vertex_count());
    int size = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cap + 1)));
    return random_vertex_subset(rng, g, size);
}

} // namespace lamplight
