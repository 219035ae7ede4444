#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "lamplight/distortion.hpp"
#include "lamplight/embeddings.hpp"
#include "lamplight/induced.hpp"

namespace lamplight {

/// La(P_k) -> B_{k+1} x B_{k+1}, claimed (2/3, 2).
inline CertifyInput certify_path_to_trees(int k) {
    struct Holder {
        Graph path;
        PathToTrees embed;
        std::vector<LampState> states;
        std::vector<std::pair<BinaryWord, BinaryWord>> images;
        Holder(int k) : path(build_path(k)), embed(k) {
            states = enumerate_lamp_states(path);
            images.reserve(states.size());
            for (const auto& s : states) images.push_back(embed.map(s));
        }
    };
    auto h = std::make_shared<Holder>(k);
    CertifyInput in;
    in.map_name = "path-to-trees(k=" + std::to_string(k) + ")";
    in.domain_size = h->states.size();
    in.describe = [h](std::size_t i) { return lamp_state_label(h->path, h->states[i]); };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance_tree(h->path, h->states[i], h->states[j]));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(PathToTrees::target_dist(h->images[i], h->images[j]));
    };
    in.claimed_a = 2.0 / 3.0;
    in.claimed_b = 2.0;
    in.claimed_a_exact = {2, 3};
    in.claimed_b_exact = {2, 1};
    return in;
}

/// La(T) -> Hamming cube, claimed (1/2, 3).
inline CertifyInput certify_tree_to_hamming(Graph tree, int basepoint) {
    struct Holder {
        TreeToHamming embed;
        std::vector<LampState> states;
        std::vector<HammingPoint> images;
        Holder(Graph t, int x0) : embed(std::move(t), x0) {
            states = enumerate_lamp_states(embed.tree);
            images.reserve(states.size());
            for (const auto& s : states) images.push_back(embed.map(s));
        }
    };
    auto h = std::make_shared<Holder>(std::move(tree), basepoint);
    CertifyInput in;
    in.map_name = "tree-to-hamming(|T|=" + std::to_string(h->embed.tree.vertex_count()) + ")";
    in.domain_size = h->states.size();
    in.describe = [h](std::size_t i) { return lamp_state_label(h->embed.tree, h->states[i]); };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance_tree(h->embed.tree, h->states[i], h->states[j]));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(hamming_distance(h->images[i], h->images[j]));
    };
    in.claimed_a = 0.5;
    in.claimed_b = 3.0;
    in.claimed_a_exact = {1, 2};
    in.claimed_b_exact = {3, 1};
    return in;
}

/// B_k -> La(P_k), claimed (1, 2).
inline CertifyInput certify_binary_to_lamp_path(int k) {
    struct Holder {
        BinaryToLampPath embed;
        std::vector<BinaryWord> words;
        std::vector<LampState> images;
        Holder(int k) : embed(k), words(binary_words_up_to(k)) {
            images.reserve(words.size());
            for (const auto& w : words) images.push_back(embed.map(w));
        }
    };
    auto h = std::make_shared<Holder>(k);
    CertifyInput in;
    in.map_name = "binary-to-lamp-path(k=" + std::to_string(k) + ")";
    in.domain_size = h->words.size();
    in.describe = [h](std::size_t i) { return "\"" + h->words[i].str() + "\""; };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(binary_tree_dist(h->words[i], h->words[j]));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance_tree(h->embed.path, h->images[i], h->images[j]));
    };
    in.claimed_a = 1.0;
    in.claimed_b = 2.0;
    in.claimed_a_exact = {1, 1};
    in.claimed_b_exact = {2, 1};
    return in;
}

/// H_k -> La(K_{km}), claimed (2m, 2m+1).
inline CertifyInput certify_hamming_to_lamp_complete(int k, int m) {
    struct Holder {
        HammingToLampComplete embed;
        std::vector<LampState> images;
        Holder(int k, int m) : embed(k, m) {
            for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s)
                images.push_back(embed.map(s));
        }
    };
    auto h = std::make_shared<Holder>(k, m);
    CertifyInput in;
    in.map_name = "hamming-to-lamp-complete(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    in.domain_size = h->images.size();
    in.describe = [h](std::size_t i) {
        std::string out = "I={";
        bool first = true;
        for (int b = 0; b < h->embed.k; ++b)
            if (i >> b & 1) {
                if (!first) out += ",";
                out += std::to_string(b + 1);
                first = false;
            }
        return out + "}";
    };
    in.src_dist = [](std::size_t i, std::size_t j) {
        return double(std::popcount(static_cast<std::uint64_t>(i ^ j)));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance(h->embed.complete, h->images[i], h->images[j]));
    };
    in.claimed_a = 2.0 * m;
    in.claimed_b = 2.0 * m + 1;
    in.claimed_a_exact = {2 * m, 1};
    in.claimed_b_exact = {2 * m + 1, 1};
    return in;
}

/// K_k -> B_{s+t}, claimed (2t+2, 2(s+t)).
inline CertifyInput certify_complete_to_binary(int k, double eps) {
    struct Holder {
        CompleteToBinary embed;
        Holder(int k, double eps) : embed(k, eps) {}
    };
    auto h = std::make_shared<Holder>(k, eps);
    CertifyInput in;
    in.map_name = "complete-to-binary(k=" + std::to_string(k) + ")";
    in.domain_size = static_cast<std::size_t>(k);
    in.describe = [](std::size_t i) { return "v" + std::to_string(i); };
    in.src_dist = [](std::size_t i, std::size_t j) { return i == j ? 0.0 : 1.0; };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(binary_tree_dist(h->embed.map(static_cast<int>(i)),
                                       h->embed.map(static_cast<int>(j))));
    };
    const long long lo = 2 * h->embed.t + 2, hi = 2 * (h->embed.s + h->embed.t);
    in.claimed_a = double(lo);
    in.claimed_b = double(hi);
    in.claimed_a_exact = {lo, 1};
    in.claimed_b_exact = {hi, 1};
    return in;
}

/// St_{n,k} -> (R^n, ||.||_p), claimed (1/2, 1). Real-valued target.
inline CertifyInput certify_star_to_normed(int n, int k, NormP p) {
    struct Holder {
        StarToNormed embed;
        std::vector<EuclideanPoint> images;
        Holder(int n, int k, NormP p) : embed(n, k, p) {
            for (int v = 0; v < embed.domain().vertex_count(); ++v) images.push_back(embed.map(v));
        }
    };
    auto h = std::make_shared<Holder>(n, k, p);
    CertifyInput in;
    in.map_name = "star-to-normed(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",p=" +
                  norm_name(p) + ")";
    in.domain_size = static_cast<std::size_t>(h->embed.domain().vertex_count());
    in.describe = [h](std::size_t i) { return h->embed.domain().label(static_cast<int>(i)); };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(h->embed.domain().dist(static_cast<int>(i), static_cast<int>(j)));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return h->embed.target_dist(h->images[i], h->images[j]);
    };
    in.integral = false;
    in.claimed_a = 0.5;
    in.claimed_b = 1.0;
    return in;
}

/// Ro_{n,k} -> l_2^{2n}, claimed (1/sqrt 2, pi/2). Real-valued target.
inline CertifyInput certify_rose_to_euclidean(int n, int k) {
    struct Holder {
        RoseToEuclidean embed;
        std::vector<EuclideanPoint> images;
        Holder(int n, int k) : embed(n, k) {
            for (int v = 0; v < embed.domain().vertex_count(); ++v) images.push_back(embed.map(v));
        }
    };
    auto h = std::make_shared<Holder>(n, k);
    CertifyInput in;
    in.map_name = "rose-to-euclidean(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    in.domain_size = static_cast<std::size_t>(h->embed.domain().vertex_count());
    in.describe = [h](std::size_t i) { return h->embed.domain().label(static_cast<int>(i)); };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(h->embed.domain().dist(static_cast<int>(i), static_cast<int>(j)));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return RoseToEuclidean::target_dist(h->images[i], h->images[j]);
    };
    in.integral = false;
    in.claimed_a = 1.0 / std::sqrt(2.0);
    in.claimed_b = std::numbers::pi / 2.0;
    return in;
}

/// La(G1 * G2) -> 4-factor product, claimed (1, 2).
inline CertifyInput certify_coalescence(PointedGraph g1, PointedGraph g2) {
    struct Holder {
        CoalescenceEmbedding embed;
        std::vector<LampState> states;
        std::vector<CoalescenceEmbedding::Image> images;
        Holder(PointedGraph a, PointedGraph b) : embed(std::move(a), std::move(b)) {
            states = enumerate_lamp_states(embed.co.pointed.graph);
            images.reserve(states.size());
            for (const auto& s : states) images.push_back(embed.map(s));
        }
    };
    auto h = std::make_shared<Holder>(std::move(g1), std::move(g2));
    CertifyInput in;
    in.map_name = "coalescence(|U|=" +
                  std::to_string(h->embed.co.pointed.graph.vertex_count()) + ")";
    in.domain_size = h->states.size();
    in.describe = [h](std::size_t i) {
        return lamp_state_label(h->embed.co.pointed.graph, h->states[i]);
    };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance(h->embed.co.pointed.graph, h->states[i], h->states[j]));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(h->embed.target_dist(h->images[i], h->images[j]));
    };
    in.claimed_a = 1.0;
    in.claimed_b = 2.0;
    in.claimed_a_exact = {1, 1};
    in.claimed_b_exact = {2, 1};
    return in;
}

/// La(K_k) -> La(B-tilde), claimed (2t+2, 2(s+t)); distortion < 1+eps.
inline CertifyInput certify_lamp_complete_to_lamp_binary(int k, double eps) {
    struct Holder {
        LampCompleteToLampBinary embed;
        std::vector<LampState> states;
        std::vector<LampState> images;
        Holder(int k, double eps) : embed(k, eps) {
            states = enumerate_lamp_states(embed.domain_base());
            images.reserve(states.size());
            for (const auto& s : states) images.push_back(embed.map(s));
        }
    };
    auto h = std::make_shared<Holder>(k, eps);
    CertifyInput in;
    in.map_name = "lamp-complete-to-lamp-binary(k=" + std::to_string(k) + ")";
    in.domain_size = h->states.size();
    in.describe = [h](std::size_t i) { return lamp_state_label(h->embed.domain_base(), h->states[i]); };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance(h->embed.domain_base(), h->states[i], h->states[j]));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance_tree(h->embed.target_tree(), h->images[i], h->images[j]));
    };
    in.claimed_a = h->embed.bound_a;
    in.claimed_b = h->embed.bound_b;
    in.claimed_a_exact = {static_cast<long long>(h->embed.bound_a), 1};
    in.claimed_b_exact = {static_cast<long long>(h->embed.bound_b), 1};
    return in;
}

/// La(K_k) -> La(C_{k*gap}) through the witness-path induced map f-bar_m;
/// f sends the clique onto equally spaced cycle vertices (a = gap,
/// b = gap*floor(k/2)). Claimed (min{a, m+1}, max{b, 3m+1}).
inline CertifyInput certify_induced_complete_to_cycle(int k, int gap, int m) {
    require(k >= 2 && gap >= 1, Errc::invalid_parameter, "need k >= 2, gap >= 1");
    struct Holder {
        Graph cycle;
        InducedMapM ind;
        std::vector<LampState> states;
        std::vector<LampState> images;
        Holder(int k, int gap, int m)
            : cycle(build_cycle(k * gap)),
              ind(GraphMap{build_complete(k), cycle,
                           [&] {
                               std::vector<int> img;
                               for (int v = 0; v < k; ++v) img.push_back(v * gap);
                               return img;
                           }(),
                           double(gap), double(gap) * (k / 2)},
                  m) {
            states = enumerate_lamp_states(ind.f.src);
            images.reserve(states.size());
            for (const auto& s : states) images.push_back(ind.map(s));
        }
    };
    auto h = std::make_shared<Holder>(k, gap, m);
    CertifyInput in;
    in.map_name = "induced-complete-to-cycle(k=" + std::to_string(k) + ",gap=" +
                  std::to_string(gap) + ",m=" + std::to_string(m) + ")";
    in.domain_size = h->states.size();
    in.describe = [h](std::size_t i) { return lamp_state_label(h->ind.f.src, h->states[i]); };
    in.src_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance(h->ind.f.src, h->states[i], h->states[j]));
    };
    in.tgt_dist = [h](std::size_t i, std::size_t j) {
        return double(lamp_distance(h->ind.f.tgt, h->images[i], h->images[j]));
    };
    const long long lo = std::llround(h->ind.bound_a()), hi = std::llround(h->ind.bound_b());
    in.claimed_a = double(lo);
    in.claimed_b = double(hi);
    in.claimed_a_exact = {lo, 1};
    in.claimed_b_exact = {hi, 1};
    return in;
}

} // namespace lamplight
