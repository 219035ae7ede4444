#include <catch2/catch_amalgamated.hpp>

#include "lamplight/families.hpp"
#include "lamplight/random.hpp"
#include "lamplight/tsp.hpp"
#include "oracles.hpp"

using namespace lamplight;
using lamplight::testing::tsp_bfs_oracle;

namespace {

VertexSet vset(const Graph& g, std::initializer_list<int> vs) {
    return g.vertex_set_of(std::vector<int>(vs));
}

} // namespace

TEST_CASE("tsp with no targets is the graph distance") {
    Rng rng(31);
    std::vector<Graph> suite{build_path(4), build_cycle(6), build_complete(5),
                             random_connected_graph(rng, 6)};
    for (const auto& g : suite)
        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = 0; y < g.vertex_count(); ++y)
                CHECK(tsp_generic(g, x, g.empty_vertex_set(), y) == g.dist(x, y));
}

TEST_CASE("tsp frozen examples") {
    auto p2 = build_path(2);
    CHECK(tsp_generic(p2, 0, vset(p2, {2}), 0) == 4);
    CHECK(tsp_bfs_oracle(p2, 0, std::vector<int>{2}, 0) == 4);

    auto c4 = build_cycle(4);
    CHECK(tsp_generic(c4, 0, vset(c4, {2}), 0) == 4);
    CHECK(tsp_bfs_oracle(c4, 0, std::vector<int>{2}, 0) == 4);
}

TEST_CASE("tsp_generic agrees with the state-space BFS oracle") {
    Rng rng(52);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 5));
        auto g = random_connected_graph(rng, n);
        auto targets = random_vertex_subset_up_to(rng, g, 4);
        int x = random_vertex(rng, g), y = random_vertex(rng, g);
        CHECK(tsp_generic(g, x, targets, y) == tsp_bfs_oracle(g, x, targets, y));
    }
}

TEST_CASE("tsp monotone in the target set and symmetric under reversal") {
    Rng rng(53);
    for (int round = 0; round < 50; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 5));
        auto g = random_connected_graph(rng, n);
        auto small = random_vertex_subset_up_to(rng, g, 3);
        auto big = small | random_vertex_subset_up_to(rng, g, 3);
        int x = random_vertex(rng, g), y = random_vertex(rng, g);
        CHECK(tsp_generic(g, x, small, y) <= tsp_generic(g, x, big, y));
        CHECK(tsp_generic(g, x, big, y) == tsp_generic(g, y, big, x));
    }
}

TEST_CASE("tsp target cap") {
    auto p = build_path(17);
    VertexSet c = p.empty_vertex_set();
    for (int v = 1; v <= 16; ++v) c.set(static_cast<std::size_t>(v));
    CHECK_THROWS_AS(tsp_generic(p, 0, c, 0), Error);
}

TEST_CASE("subset table matches single-instance answers") {
    Rng rng(54);
    auto g = random_connected_graph(rng, 6);
    std::vector<int> targets{0, 2, 4, 5};
    int x = 1, y = 3;
    auto table = subset_tsp_table(g, x, targets, y);
    for (std::size_t s = 0; s < table.size(); ++s) {
        VertexSet c = g.empty_vertex_set();
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (s >> i & 1) c.set(static_cast<std::size_t>(targets[i]));
        CHECK(table[s] == tsp_bfs_oracle(g, x, c, y));
    }
}

TEST_CASE("tree closed form") {
    auto p3 = build_path(3);
    SECTION("targets on the x-y path add nothing") {
        CHECK(tsp_tree(p3, 0, vset(p3, {1, 2}), 3) == 3);
        CHECK(tsp_tree(p3, 0, vset(p3, {0, 3}), 3) == 3);
    }
    SECTION("round trip doubles the reach") {
        CHECK(tsp_tree(p3, 0, vset(p3, {3}), 0) == 6);
    }
    SECTION("not a tree is rejected") {
        auto c4 = build_cycle(4);
        CHECK_THROWS_AS(tsp_tree(c4, 0, vset(c4, {2}), 0), Error);
        CHECK_THROWS_AS(tsp_tree_walk(c4, 0, vset(c4, {2}), 0), Error);
    }
}

TEST_CASE("tree formula equals the generic engine on random trees") {
    Rng rng(55);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 9));
        auto t = random_tree(rng, n);
        auto a = random_vertex_subset_up_to(rng, t, std::min(6, n));
        int x = random_vertex(rng, t), y = random_vertex(rng, t);
        CHECK(tsp_tree(t, x, a, y) == tsp_generic(t, x, a, y));
    }
}

TEST_CASE("tree walk construction") {
    auto p3 = build_path(3);
    SECTION("no targets gives the unique path") {
        auto w = tsp_tree_walk(p3, 0, p3.empty_vertex_set(), 3);
        CHECK(w.vertices == std::vector<int>{0, 1, 2, 3});
    }
    SECTION("single far leaf from a fixed position is out-and-back") {
        auto w = tsp_tree_walk(p3, 1, vset(p3, {3}), 1);
        CHECK(w.vertices == std::vector<int>{1, 2, 3, 2, 1});
        CHECK(w.length() == 2 * p3.dist(1, 3));
    }
    SECTION("golden walk on a star, siblings ascending") {
        auto st = build_star(2, 2); // center 0, branch 0: 1,2; branch 1: 3,4
        auto w = tsp_tree_walk(st, 0, vset(st, {2, 4}), 0);
        CHECK(w.vertices == std::vector<int>{0, 1, 2, 1, 0, 3, 4, 3, 0});
    }
    SECTION("random instances: optimal length, full coverage") {
        Rng rng(56);
        for (int round = 0; round < 200; ++round) {
            int n = 2 + static_cast<int>(uniform_below(rng, 9));
            auto t = random_tree(rng, n);
            auto a = random_vertex_subset_up_to(rng, t, std::min(6, n));
            int x = random_vertex(rng, t), y = random_vertex(rng, t);
            auto w = tsp_tree_walk(t, x, a, y);
            CHECK(is_walk_in(t, w));
            CHECK(w.vertices.front() == x);
            CHECK(w.vertices.back() == y);
            for (auto v = a.find_first(); v != VertexSet::npos; v = a.find_next(v))
                CHECK(w.visits(static_cast<int>(v)));
            CHECK(w.length() == tsp_tree(t, x, a, y));
        }
    }
}

TEST_CASE("coalescence decomposition examples") {
    PointedGraph p2a(build_path(2), 0), p2b(build_path(2), 0);
    auto co = coalesce(p2a, p2b);
    const Graph& u = co.pointed.graph;

    SECTION("same-side instance stays on its side") {
        int x = co.from1[2], y = co.from1[1];
        VertexSet c = u.empty_vertex_set();
        c.set(static_cast<std::size_t>(co.from1[0]));
        CHECK(tsp_coalescence(p2a, p2b, co, x, c, y) == tsp_generic(u, x, c, y));
        CHECK(tsp_coalescence(p2a, p2b, co, x, c, y) == 3);
    }
    SECTION("far ends round trip") {
        int far1 = co.from1[2], far2 = co.from2[2];
        VertexSet c = u.empty_vertex_set();
        c.set(static_cast<std::size_t>(far2));
        CHECK(tsp_coalescence(p2a, p2b, co, far1, c, far1) == 8);
    }
    SECTION("cross side with no targets is the coalescence metric") {
        int x = co.from1[1], y = co.from2[2];
        CHECK(tsp_coalescence(p2a, p2b, co, x, u.empty_vertex_set(), y) ==
              u.dist(co.from1[1], co.pointed.basepoint) + u.dist(co.pointed.basepoint, y));
    }
}

TEST_CASE("coalescence decomposition equals the generic engine") {
    Rng rng(57);
    for (int round = 0; round < 100; ++round) {
        int n1 = 2 + static_cast<int>(uniform_below(rng, 4));
        int n2 = 2 + static_cast<int>(uniform_below(rng, 4));
        Graph a = random_connected_graph(rng, n1);
        Graph b = random_connected_graph(rng, n2);
        PointedGraph pa(a, random_vertex(rng, a)), pb(b, random_vertex(rng, b));
        auto co = coalesce(pa, pb);
        const Graph& u = co.pointed.graph;
        auto c = random_vertex_subset_up_to(rng, u, 5);
        for (int x = 0; x < u.vertex_count(); ++x)
            for (int y = 0; y < u.vertex_count(); ++y)
                CHECK(tsp_coalescence(pa, pb, co, x, c, y) == tsp_generic(u, x, c, y));
    }
}
