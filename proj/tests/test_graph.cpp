#include <catch2/catch_amalgamated.hpp>

#include "lamplight/families.hpp"
#include "lamplight/graph.hpp"
#include "lamplight/random.hpp"
#include "lamplight/tree.hpp"

using namespace lamplight;

TEST_CASE("path builder") {
    auto p1 = build_path(1);
    CHECK(p1.vertex_count() == 2);
    CHECK(p1.edge_count() == 1);

    auto p4 = build_path(4);
    CHECK(p4.dist(p4.vertex("v0"), p4.vertex("v4")) == 4);
    CHECK(p4.diameter() == 4);
    CHECK(p4.connected());

    CHECK_THROWS_AS(build_path(0), Error);
}

TEST_CASE("family vertex and edge counts") {
    for (int k = 3; k <= 8; ++k) {
        auto c = build_cycle(k);
        CHECK(c.vertex_count() == k);
        CHECK(c.edge_count() == k);
    }
    for (int k = 1; k <= 6; ++k) {
        auto kk = build_complete(k);
        CHECK(kk.vertex_count() == k);
        CHECK(kk.edge_count() == k * (k - 1) / 2);
    }
    for (int k = 1; k <= 6; ++k) {
        auto b = build_binary_tree(k);
        CHECK(b.vertex_count() == (1 << (k + 1)) - 1);
        CHECK(is_tree(b));
    }
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            CHECK(build_star(n, k).vertex_count() == n * k + 1);
            if (k >= 3) CHECK(build_rose(n, k).vertex_count() == n * (k - 1) + 1);
        }
    for (int k = 1; k <= 6; ++k) {
        auto h = build_hamming_graph(k);
        CHECK(h.vertex_count() == 1 << k);
        CHECK(h.connected());
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(h.degree(v) == k);
    }
    CHECK_THROWS_AS(build_cycle(2), Error);
    CHECK_THROWS_AS(build_complete(0), Error);
}

TEST_CASE("binary tree counts and distances") {
    auto b2 = build_binary_tree(2);
    CHECK(b2.vertex_count() == 7);
    CHECK(b2.edge_count() == 6);

    auto b3 = build_binary_tree(3);
    CHECK(b3.dist(b3.vertex("000"), b3.vertex("1")) == 4);
}

TEST_CASE("binary word helpers agree with BFS distances") {
    auto b4 = build_binary_tree(4);
    auto words = binary_words_up_to(4);
    for (const auto& a : words) {
        REQUIRE(b4.label(binary_word_index(a)) == a.str());
        for (const auto& b : words)
            CHECK(binary_tree_dist(a, b) == b4.dist(binary_word_index(a), binary_word_index(b)));
    }
}

TEST_CASE("star of two branches is a path") {
    for (int k = 1; k <= 4; ++k) {
        auto st = build_star(2, k);
        CHECK(st.vertex_count() == 2 * k + 1);
        int leaves = 0;
        for (int v = 0; v < st.vertex_count(); ++v) {
            CHECK(st.degree(v) <= 2);
            if (st.degree(v) == 1) ++leaves;
        }
        CHECK(leaves == 2);
        CHECK(st.connected());
        CHECK(st.diameter() == 2 * k);
    }
}

TEST_CASE("rose with one leaf is a cycle") {
    for (int k = 3; k <= 6; ++k) {
        auto ro = build_rose(1, k);
        CHECK(ro.vertex_count() == k);
        for (int v = 0; v < ro.vertex_count(); ++v) CHECK(ro.degree(v) == 2);
        CHECK(ro.connected());
    }
}

TEST_CASE("variable leg trees") {
    // unit legs reproduce the plain binary tree, label for label
    for (int k = 1; k <= 4; ++k) {
        auto plain = build_binary_tree(k);
        auto legs = build_variable_leg_tree(std::vector<int>(static_cast<std::size_t>(k), 1));
        CHECK(legs.labels() == plain.labels());
        CHECK(legs.edges() == plain.edges());
    }

    auto t = build_variable_leg_tree({4, 2, 1});
    CHECK(is_tree(t));
    CHECK(t.dist(t.vertex(""), t.vertex("111")) == 7);
    CHECK(t.dist(t.vertex(""), t.vertex("000")) == 7);

    auto small = build_variable_leg_tree({2});
    CHECK(small.vertex_count() == 5);
    CHECK(is_tree(small));
    CHECK(small.diameter() == 4);

    CHECK_THROWS_AS(build_variable_leg_tree({}), Error);
    CHECK_THROWS_AS(build_variable_leg_tree({1, 0}), Error);
}

TEST_CASE("cycle distances wrap") {
    auto c5 = build_cycle(5);
    CHECK(c5.dist(c5.vertex("v0"), c5.vertex("v3")) == 2);
    CHECK(c5.dist(0, 0) == 0);
}

TEST_CASE("coalesce of two paths at endpoints") {
    auto g = coalesce(PointedGraph(build_path(3), 0), PointedGraph(build_path(3), 0));
    CHECK(g.pointed.graph.vertex_count() == 7);
    CHECK(g.pointed.graph.diameter() == 6);
    int leaves = 0;
    for (int v = 0; v < g.pointed.graph.vertex_count(); ++v)
        if (g.pointed.graph.degree(v) == 1) ++leaves;
    CHECK(leaves == 2);
}

TEST_CASE("clover counts and coalescence metric") {
    auto clo = build_clover(PointedGraph(build_path(2), 0), 8);
    CHECK(clo.pointed.graph.vertex_count() == 17);

    // d(u,v) = d1(u,v0) + d2(v0,v) across sides, d_i within a side
    Rng rng(417);
    for (int round = 0; round < 10; ++round) {
        int n1 = 2 + static_cast<int>(uniform_below(rng, 5));
        int n2 = 2 + static_cast<int>(uniform_below(rng, 5));
        Graph a = random_connected_graph(rng, n1);
        Graph b = random_connected_graph(rng, n2);
        PointedGraph pa(a, random_vertex(rng, a));
        PointedGraph pb(b, random_vertex(rng, b));
        auto co = coalesce(pa, pb);
        const Graph& u = co.pointed.graph;
        for (int v = 0; v < u.vertex_count(); ++v) {
            for (int w = 0; w < u.vertex_count(); ++w) {
                int expected;
                if (co.in_side1(v) && co.in_side1(w))
                    expected = a.dist(co.to1[static_cast<std::size_t>(v)], co.to1[static_cast<std::size_t>(w)]);
                else if (co.in_side2(v) && co.in_side2(w))
                    expected = b.dist(co.to2[static_cast<std::size_t>(v)], co.to2[static_cast<std::size_t>(w)]);
                else if (co.in_side1(v))
                    expected = a.dist(co.to1[static_cast<std::size_t>(v)], pa.basepoint) +
                               b.dist(pb.basepoint, co.to2[static_cast<std::size_t>(w)]);
                else
                    expected = b.dist(co.to2[static_cast<std::size_t>(v)], pb.basepoint) +
                               a.dist(pa.basepoint, co.to1[static_cast<std::size_t>(w)]);
                CHECK(u.dist(v, w) == expected);
            }
        }
    }
}

TEST_CASE("clover of stars and roses collapses") {
    // Clo(St_{r,s}, t) = St_{rt,s} and Clo(Ro_{r,s}, t) = Ro_{rt,s}
    auto st = build_clover(PointedGraph(build_star(2, 3), 0), 3).pointed.graph;
    auto st_direct = build_star(6, 3);
    CHECK(st.vertex_count() == st_direct.vertex_count());
    CHECK(st.edge_count() == st_direct.edge_count());
    CHECK(st.diameter() == st_direct.diameter());

    auto ro = build_clover(PointedGraph(build_rose(2, 4), 0), 2).pointed.graph;
    auto ro_direct = build_rose(4, 4);
    CHECK(ro.vertex_count() == ro_direct.vertex_count());
    CHECK(ro.edge_count() == ro_direct.edge_count());
    CHECK(ro.diameter() == ro_direct.diameter());
}

TEST_CASE("cartesian product metric is additive") {
    auto square = cartesian_product(build_path(1), build_path(1));
    CHECK(square.vertex_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);
    CHECK(square.connected());

    auto g = build_path(3);
    auto h = build_cycle(5);
    auto prod = cartesian_product(g, h);
    const int m = h.vertex_count();
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < m; ++y)
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int z = 0; z < m; ++z)
                    CHECK(prod.dist(x * m + y, v * m + z) == g.dist(x, v) + h.dist(y, z));
}

TEST_CASE("n-fold product of P1 is the Hamming graph") {
    auto p1 = build_path(1);
    auto prod = cartesian_product(cartesian_product(p1, p1), p1);
    auto h3 = build_hamming_graph(3);
    REQUIRE(prod.vertex_count() == h3.vertex_count());
    REQUIRE(prod.edge_count() == h3.edge_count());
    // product index (b1,b2,b3) -> b1*4+b2*2+b3; hamming mask = b1+2*b2+4*b3
    auto to_hamming = [](int idx) {
        int b3 = idx & 1, b2 = (idx >> 1) & 1, b1 = (idx >> 2) & 1;
        return b1 | (b2 << 1) | (b3 << 2);
    };
    for (auto [u, v] : prod.edges()) CHECK(h3.adjacent(to_hamming(u), to_hamming(v)));
}

TEST_CASE("metric axioms hold exhaustively on small suite graphs") {
    Rng rng(99);
    std::vector<Graph> suite{build_path(3),      build_cycle(5),   build_complete(4),
                             build_star(2, 2),   build_rose(1, 4), random_tree(rng, 7),
                             random_connected_graph(rng, 8)};
    for (const auto& g : suite) {
        REQUIRE(g.vertex_count() <= 8);
        auto d = g.all_pairs();
        for (int x = 0; x < g.vertex_count(); ++x) {
            CHECK(d[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] == 0);
            for (int y = 0; y < g.vertex_count(); ++y) {
                if (x != y) CHECK(d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0);
                CHECK(d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                      d[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]);
                for (int z = 0; z < g.vertex_count(); ++z)
                    CHECK(d[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] <=
                          d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +
                              d[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)]);
            }
        }
    }
}

TEST_CASE("distance cache equals BFS recomputation") {
    Rng rng(7);
    for (int round = 0; round < 5; ++round) {
        auto g = random_connected_graph(rng, 6);
        REQUIRE(g.has_distance_table());
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto row = g.bfs_from(v);
            for (int w = 0; w < g.vertex_count(); ++w)
                CHECK(g.dist(v, w) == row[static_cast<std::size_t>(w)]);
        }
    }
}

TEST_CASE("dist error paths") {
    auto p2 = build_path(2);
    CHECK_THROWS_AS(p2.vertex("nope"), Error);
    Graph disconnected({"a", "b", "c"}, {{0, 1}});
    CHECK_FALSE(disconnected.connected());
    CHECK_THROWS_AS(disconnected.dist(0, 2), Error);
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("tree path machinery") {
    auto p3 = build_path(3);
    CHECK(path_edge_set(p3, 0, 0).count() == 0);

    auto xy = path_edge_set(p3, 0, 3);
    auto yx = path_edge_set(p3, 3, 0);
    CHECK(xy == yx);
    CHECK(xy.count() == 3);

    VertexSet targets = p3.empty_vertex_set();
    targets.set(3);
    CHECK(reach_edge_set(p3, 0, targets).count() == 3);

    auto w = tree_path(p3, 0, 3);
    CHECK(w.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(is_walk_in(p3, w));

    CHECK_THROWS_AS(path_edge_set(build_cycle(4), 0, 1), Error);
}

TEST_CASE("subtree split partitions the tree") {
    auto p2 = build_path(2);
    auto split = subtree_split(p2, 1);
    REQUIRE(split.size() == 2);
    CHECK(split[0].first == 0);
    CHECK(split[0].second.count() == 1);
    CHECK(split[0].second.test(0));
    CHECK(split[1].first == 2);
    CHECK(split[1].second.test(2));

    // leaf: the single neighbour owns everything else
    auto leaf_split = subtree_split(p2, 0);
    REQUIRE(leaf_split.size() == 1);
    CHECK(leaf_split[0].second.count() == 2);

    // star center: n sets of size k
    auto st = build_star(3, 4);
    auto center_split = subtree_split(st, 0);
    REQUIRE(center_split.size() == 3);
    for (auto& [nb, set] : center_split) CHECK(set.count() == 4);

    // partition property on random trees
    Rng rng(11);
    for (int round = 0; round < 20; ++round) {
        auto t = random_tree(rng, 2 + static_cast<int>(uniform_below(rng, 9)));
        int x = random_vertex(rng, t);
        auto parts = subtree_split(t, x);
        VertexSet all = t.empty_vertex_set();
        std::size_t total = 0;
        for (auto& [nb, set] : parts) {
            CHECK((all & set).none());
            all |= set;
            total += set.count();
        }
        CHECK(total == static_cast<std::size_t>(t.vertex_count() - 1));
        CHECK_FALSE(all.test(static_cast<std::size_t>(x)));
    }
}

TEST_CASE("span edge set equals the union over all pairs") {
    Rng rng(13);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 8));
        auto t = random_tree(rng, n);
        auto c = random_vertex_subset_up_to(rng, t, n);
        EdgeSet brute = t.empty_edge_set();
        for (auto x = c.find_first(); x != VertexSet::npos; x = c.find_next(x))
            for (auto y = c.find_next(x); y != VertexSet::npos; y = c.find_next(y))
                brute |= path_edge_set(t, static_cast<int>(x), static_cast<int>(y));
        CHECK(span_edge_set(t, c) == brute);
    }
    auto p3 = build_path(3);
    CHECK(span_edge_set(p3, p3.empty_vertex_set()).none());
    VertexSet single = p3.empty_vertex_set();
    single.set(2);
    CHECK(span_edge_set(p3, single).none());
}

TEST_CASE("graphs beyond the eager cache answer distance queries by BFS") {
    auto big = build_path(5000);
    CHECK_FALSE(big.has_distance_table());
    CHECK(big.dist(0, 5000) == 5000);
    CHECK(big.dist(1234, 1234) == 0);
    CHECK(big.connected());
}

TEST_CASE("star and rose edge counts") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            CHECK(build_star(n, k).edge_count() == n * k);
            if (k >= 3) CHECK(build_rose(n, k).edge_count() == n * k);
        }
}

TEST_CASE("tree identities on random trees") {
    Rng rng(2024);
    for (int round = 0; round < 100; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 9));
        auto t = random_tree(rng, n);
        int x = random_vertex(rng, t), y = random_vertex(rng, t), a = random_vertex(rng, t);

        CHECK(static_cast<int>(path_edge_set(t, x, y).count()) == t.dist(x, y));

        // off-road edges: [x,a] \ [x,y] = [y,a] \ [x,y]
        auto xy = path_edge_set(t, x, y);
        CHECK((path_edge_set(t, x, a) - xy) == (path_edge_set(t, y, a) - xy));

        // unavoidable edges: every edge of [x,y] occurs in any walk x -> y
        std::vector<int> walk{x};
        for (int step = 0; step < 2 * n; ++step) {
            const auto& nb = t.neighbors(walk.back());
            walk.push_back(nb[uniform_below(rng, nb.size())]);
        }
        auto tail = tree_path(t, walk.back(), y);
        walk.insert(walk.end(), tail.vertices.begin() + 1, tail.vertices.end());
        EdgeSet seen = t.empty_edge_set();
        for (std::size_t i = 1; i < walk.size(); ++i)
            seen.set(static_cast<std::size_t>(t.edge_index(walk[i - 1], walk[i])));
        CHECK((xy - seen).none());
    }
}
