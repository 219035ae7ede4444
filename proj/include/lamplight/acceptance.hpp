#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "lamplight/distortion.hpp"
#include "lamplight/embeddings.hpp"
#include "lamplight/induced.hpp"
#include "lamplight/json_io.hpp"
#include "lamplight/random.hpp"
#include "lamplight/registry.hpp"
#include "lamplight/tsp.hpp"

namespace lamplight {

enum class SuiteLevel { quick, full };

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
};

namespace acceptance {

/// A1: the tree closed form and the reconstructed walk agree with the
/// generic engine on seeded random trees, over every endpoint pair.
inline CriterionResult a1_tree_tsp(SuiteLevel level) {
    const int tree_count = level == SuiteLevel::full ? 200 : 40;
    Rng rng(0xA1);
    std::uint64_t instances = 0, mismatches = 0;
    std::string witness;
    for (int round = 0; round < tree_count; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 9));
        auto t = random_tree(rng, n);
        auto a = random_vertex_subset_up_to(rng, t, std::min(6, n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                ++instances;
                int closed = tsp_tree(t, x, a, y);
                int generic = tsp_generic(t, x, a, y);
                auto walk = tsp_tree_walk(t, x, a, y);
                bool covered = true;
                for (auto v = a.find_first(); v != VertexSet::npos; v = a.find_next(v))
                    covered = covered && walk.visits(static_cast<int>(v));
                bool ok = closed == generic && walk.length() == closed &&
                          walk.vertices.front() == x && walk.vertices.back() == y && covered &&
                          is_walk_in(t, walk);
                if (!ok && ++mismatches == 1)
                    witness = " first mismatch: tree#" + std::to_string(round) + " x=" +
                              t.label(x) + " y=" + t.label(y);
            }
    }
    return {"A1", "tree walk-TSP closed form and optimal-walk reconstruction",
            mismatches == 0,
            std::to_string(tree_count) + " trees, " + std::to_string(instances) +
                " instances, " + std::to_string(mismatches) + " mismatches" + witness};
}

/// A2: the closed lamplighter metric equals BFS on the explicit lamplighter
/// graph, exhaustively over all state pairs of seeded small graphs.
inline CriterionResult a2_lamp_metric(SuiteLevel level) {
    const int graph_count = level == SuiteLevel::full ? 50 : 10;
    Rng rng(0xA2);
    std::uint64_t pairs = 0, mismatches = 0;
    std::string witness;
    for (int round = 0; round < graph_count; ++round) {
        int n = 2 + static_cast<int>(uniform_below(rng, 5));
        auto g = random_connected_graph(rng, n);
        auto la = build_lamplighter_graph(g);
        const int states = n << n;

        // tsp(x, S, y) for every subset at once, then O(1) per state pair
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        std::vector<std::vector<std::vector<int>>> tsp_tab(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            tsp_tab[static_cast<std::size_t>(x)].resize(static_cast<std::size_t>(n));
            for (int y = 0; y < n; ++y)
                tsp_tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                    subset_tsp_table(g, x, all, y);
        }

        for (int i = 0; i < states; ++i) {
            auto row = la.bfs_from(i);
            const int pos_i = i % n;
            const std::uint64_t mask_i = static_cast<std::uint64_t>(i) / n;
            for (int j = i + 1; j < states; ++j) {
                ++pairs;
                const int pos_j = j % n;
                const std::uint64_t delta = mask_i ^ (static_cast<std::uint64_t>(j) / n);
                int formula =
                    tsp_tab[static_cast<std::size_t>(pos_i)][static_cast<std::size_t>(pos_j)]
                           [static_cast<std::size_t>(delta)] +
                    std::popcount(delta);
                if (formula != row[static_cast<std::size_t>(j)] && ++mismatches == 1)
                    witness = " first mismatch: graph#" + std::to_string(round) + " " +
                              la.label(i) + " vs " + la.label(j);
            }
        }
    }
    return {"A2", "lamplighter metric formula vs explicit-graph BFS", mismatches == 0,
            std::to_string(graph_count) + " graphs, " + std::to_string(pairs) +
                " state pairs, " + std::to_string(mismatches) + " mismatches" + witness};
}

inline std::vector<Graph> small_tree_suite(SuiteLevel level) {
    std::vector<Graph> suite;
    for (int k = 1; k <= 5; ++k) suite.push_back(build_path(k));
    suite.push_back(build_star(2, 2));
    Rng rng(0xA3);
    const int extra = level == SuiteLevel::full ? 30 : 8;
    for (int i = 0; i < extra; ++i)
        suite.push_back(random_tree(rng, 2 + static_cast<int>(uniform_below(rng, 5))));
    return suite;
}

/// A3: the Hamming-cube embedding of La(T) respects (1/2, 3) exhaustively.
inline CriterionResult a3_tree_to_hamming(SuiteLevel level) {
    std::uint64_t pairs = 0;
    int trees = 0;
    bool all_pass = true;
    std::string worst;
    for (auto& t : small_tree_suite(level)) {
        ++trees;
        auto rep = certify(certify_tree_to_hamming(t, 0), CertifyMode::exhaustive);
        pairs += rep.pairs;
        if (!rep.pass) {
            all_pass = false;
            if (worst.empty())
                worst = " violation in " + rep.map_name + ": " + rep.witnesses.front().u +
                        " vs " + rep.witnesses.front().v;
        }
    }
    return {"A3", "lamplighter-over-tree into Hamming cube within (1/2, 3)", all_pass,
            std::to_string(trees) + " trees, " + std::to_string(pairs) +
                " state pairs, bounds 1/2 and 3" + worst};
}

/// A4: La(P_k) into a product of two binary trees within (2/3, 2).
inline CriterionResult a4_path_to_trees(SuiteLevel level) {
    bool all_pass = true;
    std::uint64_t pairs = 0;
    std::string worst;
    const int exhaustive_max = level == SuiteLevel::full ? 5 : 4;
    for (int k = 1; k <= exhaustive_max; ++k) {
        auto rep = certify(certify_path_to_trees(k), CertifyMode::exhaustive);
        pairs += rep.pairs;
        if (!rep.pass && all_pass) {
            all_pass = false;
            worst = " violation at k=" + std::to_string(k);
        }
    }
    const int sampled_max = level == SuiteLevel::full ? 10 : 6;
    const std::uint64_t budget = level == SuiteLevel::full ? 10000 : 2000;
    for (int k = 6; k <= sampled_max; ++k) {
        auto rep = certify(certify_path_to_trees(k), CertifyMode::sampled, budget, 0xA4 + k);
        pairs += rep.pairs;
        if (!rep.pass && all_pass) {
            all_pass = false;
            worst = " violation at k=" + std::to_string(k);
        }
    }
    return {"A4", "lamplighter-over-path into two binary trees within (2/3, 2)", all_pass,
            "k=1.." + std::to_string(exhaustive_max) + " exhaustive, k=6.." +
                std::to_string(sampled_max) + " sampled, " + std::to_string(pairs) + " pairs" +
                worst};
}

/// A5: the 4-factor coalescence embedding satisfies d <= d_box <= 2d,
/// exhaustively, with la-distances read off the explicit lamplighter graph.
inline CriterionResult a5_coalescence(SuiteLevel level) {
    std::vector<std::pair<PointedGraph, PointedGraph>> cases;
    cases.emplace_back(PointedGraph(build_path(2), 0), PointedGraph(build_path(2), 0));
    Rng rng(0xA5);
    const int random_cases = level == SuiteLevel::full ? 10 : 3;
    for (int i = 0; i < random_cases; ++i) {
        int n1 = 2 + static_cast<int>(uniform_below(rng, 3));
        int n2 = 2 + static_cast<int>(uniform_below(rng, 3));
        Graph a = random_connected_graph(rng, n1);
        Graph b = random_connected_graph(rng, n2);
        int ba = random_vertex(rng, a), bb = random_vertex(rng, b);
        cases.emplace_back(PointedGraph(std::move(a), ba), PointedGraph(std::move(b), bb));
    }

    std::uint64_t pairs = 0, violations = 0;
    std::string witness;
    for (auto& [g1, g2] : cases) {
        CoalescenceEmbedding emb(g1, g2);
        const Graph& u = emb.co.pointed.graph;
        auto la_u = build_lamplighter_graph(u);
        auto la1 = build_lamplighter_graph(g1.graph);
        auto la2 = build_lamplighter_graph(g2.graph);
        const int states = la_u.vertex_count();

        struct Img {
            int f1, f2, c1, c2;
        };
        std::vector<Img> images;
        images.reserve(static_cast<std::size_t>(states));
        for (int i = 0; i < states; ++i) {
            auto img = emb.map(lamp_state_at(u, i));
            images.push_back({lamp_state_index(g1.graph, img.factor1),
                              lamp_state_index(g2.graph, img.factor2), img.clover1_vertex,
                              img.clover2_vertex});
        }

        for (int i = 0; i < states; ++i) {
            auto row = la_u.bfs_from(i);
            for (int j = i + 1; j < states; ++j) {
                ++pairs;
                int d = row[static_cast<std::size_t>(j)];
                int dbox = la1.dist(images[static_cast<std::size_t>(i)].f1,
                                    images[static_cast<std::size_t>(j)].f1) +
                           la2.dist(images[static_cast<std::size_t>(i)].f2,
                                    images[static_cast<std::size_t>(j)].f2) +
                           emb.clover1.pointed.graph.dist(images[static_cast<std::size_t>(i)].c1,
                                                          images[static_cast<std::size_t>(j)].c1) +
                           emb.clover2.pointed.graph.dist(images[static_cast<std::size_t>(i)].c2,
                                                          images[static_cast<std::size_t>(j)].c2);
                if (!(d <= dbox && dbox <= 2 * d) && ++violations == 1)
                    witness = " first violation: " + la_u.label(i) + " vs " + la_u.label(j);
            }
        }
    }
    return {"A5", "coalescence 4-factor embedding within (1, 2)", violations == 0,
            std::to_string(cases.size()) + " coalescences, " + std::to_string(pairs) +
                " state pairs, " + std::to_string(violations) + " violations" + witness};
}

/// A6: the three exact constant checks for the cube/clique/binary-tree maps.
/// The middle sandwich is checked for m in {1,2,3}; m = 1 fails
/// on the pairs that flip exactly the block containing v0 (a single vertical
/// move costs 1 < 2m), so that sub-case reports its violations honestly.
inline CriterionResult a6_exact_constants(SuiteLevel level) {
    std::string detail;
    bool all_pass = true;

    // B_k -> La(P_k) within (1, 2), exact
    {
        const int kmax = level == SuiteLevel::full ? 8 : 6;
        std::uint64_t pairs = 0;
        bool ok = true;
        for (int k = 1; k <= kmax; ++k) {
            auto rep = certify(certify_binary_to_lamp_path(k), CertifyMode::exhaustive);
            pairs += rep.pairs;
            ok = ok && rep.pass;
        }
        detail += "binary->lamp-path k<=" + std::to_string(kmax) + " (" +
                  std::to_string(pairs) + " pairs): " + (ok ? "exact" : "VIOLATED");
        all_pass = all_pass && ok;
    }

    // H_k -> La(K_{km}) sandwich 2m dH <= dLa <= 2m dH + 1, exact
    {
        const int kmax = level == SuiteLevel::full ? 4 : 3;
        const int mmax = level == SuiteLevel::full ? 3 : 2;
        std::uint64_t pairs = 0, violations = 0;
        std::string witness;
        for (int k = 1; k <= kmax; ++k)
            for (int m = 1; m <= mmax; ++m) {
                HammingToLampComplete f(k, m);
                std::vector<int> all(static_cast<std::size_t>(k * m));
                for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
                auto tsp_tab = subset_tsp_table(f.complete, 0, all, 0);
                for (std::uint32_t i = 0; i < (1u << k); ++i)
                    for (std::uint32_t j = 0; j < i; ++j) {
                        ++pairs;
                        int dh = std::popcount(i ^ j);
                        std::uint64_t lamp_delta = 0;
                        for (int b = 0; b < k; ++b)
                            if ((i ^ j) >> b & 1)
                                lamp_delta |= ((std::uint64_t{1} << m) - 1) << (b * m);
                        int dla = tsp_tab[lamp_delta] + std::popcount(lamp_delta);
                        if (!(2 * m * dh <= dla && dla <= 2 * m * dh + 1) && ++violations == 1)
                            witness = " first: k=" + std::to_string(k) + " m=" +
                                      std::to_string(m) + " I^J flips v0's block, d_La=" +
                                      std::to_string(dla) + " < " + std::to_string(2 * m * dh);
                    }
            }
        bool ok = violations == 0;
        detail += "; hamming->lamp-complete k<=" + std::to_string(kmax) + ",m<=" +
                  std::to_string(mmax) + " (" + std::to_string(pairs) +
                  " pairs): " + (ok ? "exact" : std::to_string(violations) +
                  " violations, all at m=1 single-move corner" + witness);
        all_pass = all_pass && ok;
    }

    // K_k -> B_{s+t}: image distances within [2t+2, 2(s+t)], BFS oracle
    {
        const int kmax = level == SuiteLevel::full ? 8 : 6;
        bool ok = true;
        for (int k = 2; k <= kmax; ++k) {
            CompleteToBinary f(k, 1.0);
            auto bn = build_binary_tree(f.height());
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < i && ok; ++j) {
                    int d = bn.dist(binary_word_index(f.map(i)), binary_word_index(f.map(j)));
                    ok = d >= 2 * f.t + 2 && d <= 2 * (f.s + f.t);
                }
        }
        detail += std::string("; clique->binary-tree k<=") + std::to_string(kmax) +
                  " leaf distances: " + (ok ? "in range" : "VIOLATED");
        all_pass = all_pass && ok;
    }

    return {"A6", "exact constants for the cube/clique/binary-tree maps", all_pass, detail};
}

/// A7: witness-path induced maps via the explicit La(C_9) oracle, plus the
/// growth bound on the witness-set cost.
inline CriterionResult a7_induced(SuiteLevel) {
    bool all_pass = true;
    std::string detail;

    GraphMap f{build_complete(3), build_cycle(9), {0, 3, 6}, 3.0, 3.0};
    auto la_target = build_lamplighter_graph(f.tgt);
    auto states = enumerate_lamp_states(f.src);
    for (int m : {0, 1}) {
        InducedMapM lift(f, m);
        std::vector<int> idx;
        idx.reserve(states.size());
        for (const auto& s : states) idx.push_back(lamp_state_index(f.tgt, lift.map(s)));
        std::map<int, std::vector<int>> rows;
        for (int i : idx)
            if (!rows.count(i)) rows.emplace(i, la_target.bfs_from(i));

        const int lo = std::min(3, m + 1), hi = std::max(3, 3 * m + 1);
        std::uint64_t violations = 0, pairs = 0;
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = i + 1; j < states.size(); ++j) {
                ++pairs;
                int ds = lamp_distance(f.src, states[i], states[j]);
                int dt = rows.at(idx[i])[static_cast<std::size_t>(idx[j])];
                if (!(lo * ds <= dt && dt <= hi * ds)) ++violations;
            }
        bool ok = violations == 0;
        detail += "m=" + std::to_string(m) + " bounds (" + std::to_string(lo) + "," +
                  std::to_string(hi) + ") on " + std::to_string(pairs) +
                  " pairs: " + (ok ? "hold" : std::to_string(violations) + " VIOLATIONS") + "; ";
        all_pass = all_pass && ok;
    }

    int worst_step = 0;
    for (auto& q : {PointedGraph(build_binary_tree(3), 0), PointedGraph(build_binary_tree(4), 0),
                    PointedGraph(build_path(8), 0)}) {
        VertexSet w = q.graph.empty_vertex_set();
        w.set(static_cast<std::size_t>(q.basepoint));
        int prev = witness_cost(q, w);
        while (static_cast<int>(w.count()) < q.graph.vertex_count()) {
            int next_v = -1;
            for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v))
                for (int nb : q.graph.neighbors(static_cast<int>(v)))
                    if (!w.test(static_cast<std::size_t>(nb)) && (next_v < 0 || nb < next_v))
                        next_v = nb;
            w.set(static_cast<std::size_t>(next_v));
            int c = witness_cost(q, w);
            worst_step = std::max(worst_step, c - prev);
            if (c - prev < 1) worst_step = 1000; // must strictly increase
            prev = c;
        }
    }
    bool growth_ok = worst_step <= 3;
    detail += "witness-cost growth steps <= 3 over full traces: " +
              std::string(growth_ok ? "hold" : "VIOLATED") +
              " (max step " + std::to_string(worst_step) + ")";
    all_pass = all_pass && growth_ok;

    return {"A7", "witness-path induced maps and witness-set growth", all_pass, detail};
}

/// A8: La(K_k) into the lamplighter over a gadget-extended binary tree.
inline CriterionResult a8_lamp_clique_to_tree(SuiteLevel level) {
    bool all_pass = true;
    std::string detail;
    std::vector<int> ks{3};
    if (level == SuiteLevel::full) ks.push_back(4);
    for (int k : ks) {
        LampCompleteToLampBinary f(k, 1.0);
        auto rep = certify(certify_lamp_complete_to_lamp_binary(k, 1.0), CertifyMode::exhaustive);
        bool ok = rep.pass && rep.distortion <= f.distortion_bound() + 1e-12;
        if (k == 3) ok = ok && f.base.s == 2 && f.base.t == 2 && f.r == 4;
        detail += "k=" + std::to_string(k) + ": distortion " + std::to_string(rep.distortion) +
                  " <= " + std::to_string(f.distortion_bound()) + " over " +
                  std::to_string(rep.pairs) + " pairs: " + (ok ? "pass" : "FAIL") + "; ";
        all_pass = all_pass && ok;
    }
    return {"A8", "lamplighter-over-clique into lamplighter-over-tree", all_pass, detail};
}

/// A9: numeric constants of the geometric embeddings. The k-gon radius k/4
/// makes the measured Lipschitz constant exactly (k/2) sin(pi/k) for every
/// k; for even k the antipodal pairs realize ratio 1 and the full measured
/// distortion coincides with it.
inline CriterionResult a9_geometric(SuiteLevel level) {
    bool all_pass = true;
    std::string detail;

    {
        double worst_err = 0;
        bool ok = true;
        for (int k = 4; k <= 12; ++k) {
            auto rep = certify(certify_rose_to_euclidean(1, k), CertifyMode::exhaustive);
            double expected = (k / 2.0) * std::sin(std::numbers::pi / k);
            worst_err = std::max(worst_err, std::abs(rep.lipschitz - expected));
            ok = ok && std::abs(rep.lipschitz - expected) < 1e-9;
            if (k % 2 == 0) ok = ok && std::abs(rep.distortion - expected) < 1e-9;
        }
        detail += "single-cycle lipschitz = (k/2)sin(pi/k), k=4..12 (max err " +
                  std::to_string(worst_err) + "): " + (ok ? "pass" : "FAIL");
        all_pass = all_pass && ok;
    }

    {
        const int nmax = level == SuiteLevel::full ? 4 : 2;
        const int kmax = level == SuiteLevel::full ? 12 : 8;
        bool ok = true;
        std::uint64_t pairs = 0;
        for (int n = 1; n <= nmax; ++n)
            for (int k = 3; k <= kmax; ++k) {
                auto rep = certify(certify_rose_to_euclidean(n, k), CertifyMode::exhaustive);
                pairs += rep.pairs;
                ok = ok && rep.pass;
            }
        detail += "; rose bounds (1/sqrt2, pi/2) n<=" + std::to_string(nmax) + " k<=" +
                  std::to_string(kmax) + " (" + std::to_string(pairs) +
                  " pairs): " + (ok ? "pass" : "FAIL");
        all_pass = all_pass && ok;
    }

    {
        bool ok = true;
        std::uint64_t pairs = 0;
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 5; ++k) {
                auto rep = certify(certify_star_to_normed(n, k, NormP::linf),
                                   CertifyMode::exhaustive);
                pairs += rep.pairs;
                ok = ok && rep.pass;
            }
        detail += "; star bounds (1/2, 1) n<=4 k<=5 p=inf (" + std::to_string(pairs) +
                  " pairs): " + (ok ? "pass" : "FAIL");
        all_pass = all_pass && ok;
    }

    return {"A9", "rose and star numeric constants", all_pass, detail};
}

/// A10 is a scope statement, not a computation: the superreflexivity /
/// BMW-type / infinite-graph results carry no desk-scale check; their
/// constructive ingredients are exactly what A5-A9 exercise.
inline CriterionResult a10_scope(SuiteLevel) {
    return {"A10", "non-desk-scale results excluded by design", true,
            "no check to run; constructive ingredients covered by A5-A9"};
}

} // namespace acceptance

inline std::vector<CriterionResult> run_acceptance(SuiteLevel level) {
    using namespace acceptance;
    return {a1_tree_tsp(level),   a2_lamp_metric(level), a3_tree_to_hamming(level),
            a4_path_to_trees(level), a5_coalescence(level), a6_exact_constants(level),
            a7_induced(level),    a8_lamp_clique_to_tree(level), a9_geometric(level),
            a10_scope(level)};
}

} // namespace lamplight
