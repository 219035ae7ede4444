#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "lamplight/embeddings.hpp"
#include "lamplight/random.hpp"
#include "lamplight/registry.hpp"

using namespace lamplight;

TEST_CASE("path-to-trees pointwise values") {
    PathToTrees f2(2);
    auto p2 = build_path(2);

    auto empty = f2.map(make_lamp_state(p2, {}, 0));
    CHECK(empty.first.len == 0);
    CHECK(empty.second.str() == "000"); // k+1 zeros

    auto ex = f2.map(make_lamp_state(p2, {0}, 1));
    CHECK(ex.first.str() == "1");
    CHECK(ex.second.str() == "00");
}

TEST_CASE("path-to-trees bounds hold exhaustively on La(P_4)") {
    auto rep = certify(certify_path_to_trees(4), CertifyMode::exhaustive);
    CHECK(rep.pass);
    CHECK(rep.colipschitz >= 2.0 / 3.0);
    CHECK(rep.lipschitz <= 2.0);
    // both words always fit in B_{k+1}
    PathToTrees f(4);
    auto p4 = build_path(4);
    for (const auto& s : enumerate_lamp_states(p4)) {
        auto [l, r] = f.map(s);
        CHECK(l.len <= 5);
        CHECK(r.len <= 5);
    }
}

TEST_CASE("hamming coordinates") {
    auto p1 = build_path(1);
    CHECK(hamming_coordinates(p1, make_lamp_state(p1, {}, 0)).support() == 0);
    CHECK(hamming_coordinates(p1, make_lamp_state(p1, {1}, 1)).support() == 0);

    SECTION("support size is exactly |[x,A]|") {
        Rng rng(71);
        for (int round = 0; round < 100; ++round) {
            int n = 2 + static_cast<int>(uniform_below(rng, 7));
            auto t = random_tree(rng, n);
            LampState s{random_vertex_subset_up_to(rng, t, n), random_vertex(rng, t)};
            CHECK(hamming_coordinates(t, s).support() ==
                  reach_edge_set(t, s.pos, s.lamps).count());
        }
    }

    SECTION("sandwich inequality") {
        Rng rng(72);
        for (int round = 0; round < 100; ++round) {
            int n = 2 + static_cast<int>(uniform_below(rng, 6));
            auto t = random_tree(rng, n);
            LampState u{random_vertex_subset_up_to(rng, t, n), random_vertex(rng, t)};
            LampState v{random_vertex_subset_up_to(rng, t, n), random_vertex(rng, t)};
            VertexSet delta = u.lamps ^ v.lamps;
            RootedTree rt(t, u.pos);
            EdgeSet off = t.empty_edge_set();
            for (auto a = delta.find_first(); a != VertexSet::npos; a = delta.find_next(a))
                rt.add_path_edges(u.pos, static_cast<int>(a), off);
            EdgeSet xy = rt.path_edges(u.pos, v.pos);
            int first_term = static_cast<int>((off - xy).count());
            int dh = hamming_distance(hamming_coordinates(t, u), hamming_coordinates(t, v));
            CHECK(first_term <= dh);
            CHECK(dh <= 2 * first_term + 2 * static_cast<int>(xy.count()));
        }
    }
}

TEST_CASE("tree-to-hamming pointwise values") {
    auto p1 = build_path(1);
    TreeToHamming F(p1, 0);
    CHECK(F.map(make_lamp_state(p1, {}, 0)).support() == 0);

    auto img = F.map(make_lamp_state(p1, {1}, 1));
    CHECK(img.support() == 2); // one E: key, one V: key, no F: keys
    CHECK(hamming_distance(F.map(make_lamp_state(p1, {}, 0)), img) == 2);
    CHECK(lamp_distance_tree(p1, make_lamp_state(p1, {}, 0), make_lamp_state(p1, {1}, 1)) == 2);
}

TEST_CASE("tree-to-hamming bounds on small trees") {
    Rng rng(73);
    for (int round = 0; round < 4; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 4));
        auto rep = certify(certify_tree_to_hamming(random_tree(rng, n), 0),
                           CertifyMode::exhaustive);
        INFO(rep.map_name);
        CHECK(rep.pass);
    }
}

TEST_CASE("binary tree into lamplighter over the path") {
    BinaryToLampPath f(3);
    auto root_img = f.map(BinaryWord{});
    CHECK(root_img.lamps.none());
    CHECK(root_img.pos == 0);

    auto one = f.map(BinaryWord::parse("1"));
    CHECK(lamp_distance_tree(f.path, root_img, one) == 2);
    auto zero = f.map(BinaryWord::parse("0"));
    CHECK(lamp_distance_tree(f.path, root_img, zero) == 1);

    CHECK_THROWS_AS(f.map(BinaryWord::parse("0101")), Error);

    auto rep = certify(certify_binary_to_lamp_path(6), CertifyMode::exhaustive);
    CHECK(rep.pass);
    CHECK(rep.lipschitz <= 2.0);
    CHECK(rep.colipschitz >= 1.0);
}

TEST_CASE("hamming cube into lamplighter over the complete graph") {
    HammingToLampComplete f(2, 2); // K_4, V_1 = {v0,v1}, V_2 = {v2,v3}
    auto k4 = f.complete;
    CHECK(lamp_distance(k4, f.map(0b01), f.map(0b01)) == 0);
    CHECK(lamp_distance(k4, f.map(0b01), f.map(0)) == 4); // v0 in the flipped block
    CHECK(lamp_distance(k4, f.map(0b10), f.map(0)) == 5); // v0 outside it

    SECTION("exact sandwich 2m d_H <= d_La <= 2m d_H + 1 for m >= 2") {
        for (int k = 1; k <= 3; ++k)
            for (int m = 2; m <= 3; ++m) {
                HammingToLampComplete g(k, m);
                for (std::uint32_t i = 0; i < (1u << k); ++i)
                    for (std::uint32_t j = 0; j < i; ++j) {
                        int dh = std::popcount(i ^ j);
                        int dla = lamp_distance(g.complete, g.map(i), g.map(j));
                        CHECK(2 * m * dh <= dla);
                        CHECK(dla <= 2 * m * dh + 1);
                    }
            }
    }

    SECTION("m = 1 corner: flipping only v0's own block costs a single move") {
        // the lower half of the sandwich cannot hold here: with singleton
        // blocks, I ^ J = {block of v0} flips the lamp under the lamplighter
        for (int k = 1; k <= 3; ++k) {
            HammingToLampComplete g(k, 1);
            CHECK(lamp_distance(g.complete, g.map(1u), g.map(0u)) == 1); // < 2 = 2m d_H
            // all other pairs still satisfy the sandwich
            for (std::uint32_t i = 0; i < (1u << k); ++i)
                for (std::uint32_t j = 0; j < i; ++j) {
                    if ((i ^ j) == 1u) continue;
                    int dh = std::popcount(i ^ j);
                    int dla = lamp_distance(g.complete, g.map(i), g.map(j));
                    CHECK(2 * dh <= dla);
                    CHECK(dla <= 2 * dh + 1);
                }
        }
    }

    SECTION("claimed multiplicative bounds") {
        auto rep = certify(certify_hamming_to_lamp_complete(3, 2), CertifyMode::exhaustive);
        CHECK(rep.pass);
    }
}

TEST_CASE("complete graph into the binary tree") {
    SECTION("k=2 is a single pair within the distortion bound") {
        CompleteToBinary f(2, 1.0);
        double d = binary_tree_dist(f.map(0), f.map(1));
        CHECK(d >= 2 * f.t + 2);
        CHECK(d <= 2 * (f.s + f.t));
    }

    SECTION("k=3, eps=1 gives s=2, t=2 and distances in [6,8]") {
        CompleteToBinary f(3, 1.0);
        CHECK(f.s == 2);
        CHECK(f.t == 2);
        auto b4 = build_binary_tree(4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < i; ++j) {
                int d = b4.dist(binary_word_index(f.map(i)), binary_word_index(f.map(j)));
                CHECK(d >= 6);
                CHECK(d <= 8);
            }
    }

    SECTION("k=4, eps=1/2 keeps every pair within ratio 3/2") {
        CompleteToBinary f(4, 0.5);
        CHECK(f.distortion_bound() <= 1.5);
        auto bn = build_binary_tree(f.height());
        int lo = 1 << 20, hi = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j) {
                int d = bn.dist(binary_word_index(f.map(i)), binary_word_index(f.map(j)));
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
        CHECK(double(hi) / double(lo) <= 1.5);
        auto rep = certify(certify_complete_to_binary(4, 0.5), CertifyMode::exhaustive);
        CHECK(rep.pass);
    }
}

TEST_CASE("star into a normed space") {
    StarToNormed f(3, 4, NormP::linf);
    int center = f.clover.pointed.basepoint;
    CHECK(f.map(center).coordinates == std::vector<double>{0, 0, 0});

    // branch tips map to k e_i; cross-branch linf distance is k = d/2
    int tip0 = f.clover.from_copy[0][4], tip1 = f.clover.from_copy[1][4];
    CHECK(f.target_dist(f.map(tip0), f.map(tip1)) == 4.0);
    CHECK(f.domain().dist(tip0, tip1) == 8);

    for (NormP p : {NormP::l1, NormP::l2, NormP::linf}) {
        auto rep = certify(certify_star_to_normed(3, 4, p), CertifyMode::exhaustive);
        INFO(norm_name(p));
        CHECK(rep.pass);
    }
}

TEST_CASE("rose into euclidean space") {
    RoseToEuclidean f(2, 8);
    int center = f.clover.pointed.basepoint;
    for (double c : f.map(center).coordinates) CHECK(c == 0.0);

    SECTION("single-cycle lipschitz constant is (k/2) sin(pi/k)") {
        for (int k = 4; k <= 12; ++k) {
            auto rep = certify(certify_rose_to_euclidean(1, k), CertifyMode::exhaustive);
            double expected = (k / 2.0) * std::sin(std::numbers::pi / k);
            CHECK(std::abs(rep.lipschitz - expected) < 1e-9);
            if (k % 2 == 0) {
                // antipodal pairs realize ratio 1, so the full distortion
                // coincides with the lipschitz constant for even cycles
                CHECK(std::abs(rep.distortion - expected) < 1e-9);
                CHECK(std::abs(rep.colipschitz - 1.0) < 1e-9);
            }
            CHECK(rep.pass);
        }
    }

    SECTION("rose bounds hold exhaustively") {
        auto rep = certify(certify_rose_to_euclidean(2, 8), CertifyMode::exhaustive);
        CHECK(rep.pass);
        CHECK(rep.colipschitz >= 1.0 / std::sqrt(2.0) - 1e-9);
        CHECK(rep.lipschitz <= std::numbers::pi / 2.0 + 1e-9);
    }
}

TEST_CASE("coalescence embedding") {
    PointedGraph p2a(build_path(2), 0), p2b(build_path(2), 0);
    CoalescenceEmbedding f(p2a, p2b);

    SECTION("basepoint maps to basepoints and copy-0 centers") {
        LampState s{f.co.pointed.graph.empty_vertex_set(), f.co.pointed.basepoint};
        auto img = f.map(s);
        CHECK(img.factor1.lamps.none());
        CHECK(img.factor1.pos == p2a.basepoint);
        CHECK(img.factor2.lamps.none());
        CHECK(img.factor2.pos == p2b.basepoint);
        CHECK(img.clover1_vertex == f.clover1.pointed.basepoint);
        CHECK(img.clover2_vertex == f.clover2.pointed.basepoint);
    }

    SECTION("side-1 positions land in the clover copy indexed by the side-2 lamps") {
        LampState s{f.co.pointed.graph.empty_vertex_set(), f.co.from1[1]};
        s.lamps.set(static_cast<std::size_t>(f.co.from2[1]));
        s.lamps.set(static_cast<std::size_t>(f.co.from2[2]));
        auto img = f.map(s);
        int copy = f.clover1.copy_of[static_cast<std::size_t>(img.clover1_vertex)];
        CHECK(copy == 0b110); // mask of side-2 vertices {1,2}
        CHECK(f.clover1.orig_of[static_cast<std::size_t>(img.clover1_vertex)] == 1);
    }

    SECTION("sandwich d <= d_box <= 2d exhaustively on La(P_2 * P_2)") {
        auto rep = certify(certify_coalescence(p2a, p2b), CertifyMode::exhaustive);
        CHECK(rep.pass);
    }
}
