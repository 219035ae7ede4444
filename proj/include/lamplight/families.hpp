#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lamplight/graph.hpp"

namespace lamplight {

/// Vertex of a height-k binary tree: a word over {0,1} of length <= k.
/// Stored LSB-first (bit s-1 of `bits` is the s-th symbol). The root is the
/// empty word.
struct BinaryWord {
    int len = 0;
    std::uint64_t bits = 0;

    bool bit(int s) const { return (bits >> (s - 1)) & 1u; } // s in 1..len

    BinaryWord parent() const { return {len - 1, bits & ((std::uint64_t{1} << (len - 1)) - 1)}; }

    BinaryWord child(int b) const {
        return {len + 1, bits | (static_cast<std::uint64_t>(b) << len)};
    }

    std::string str() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(len));
        for (int i = 1; i <= len; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    static BinaryWord parse(const std::string& s) {
        require(s.size() <= 63, Errc::invalid_parameter, "binary word too long");
        BinaryWord w;
        for (char c : s) {
            require(c == '0' || c == '1', Errc::invalid_parameter,
                    "binary word must be over {0,1}");
            w = w.child(c - '0');
        }
        return w;
    }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

/// Length of the longest common prefix (the meet in the tree order).
inline int common_prefix(const BinaryWord& a, const BinaryWord& b) {
    int limit = std::min(a.len, b.len);
    std::uint64_t x = a.bits ^ b.bits;
    int first_diff = x == 0 ? 64 : std::countr_zero(x);
    return std::min(limit, first_diff);
}

/// Tree metric on binary words: |a| + |b| - 2|a ^ b|.
inline int binary_tree_dist(const BinaryWord& a, const BinaryWord& b) {
    return a.len + b.len - 2 * common_prefix(a, b);
}

/// Canonical vertex index of a word in the level-order enumeration of B_k:
/// all words of length 0, then length 1, ... within a level ordered by the
/// word read as a binary number (first symbol most significant).
inline int binary_word_index(const BinaryWord& w) {
    std::uint64_t value = 0;
    for (int s = 1; s <= w.len; ++s) value = (value << 1) | (w.bit(s) ? 1u : 0u);
    return static_cast<int>(((std::uint64_t{1} << w.len) - 1) + value);
}

inline std::vector<BinaryWord> binary_words_up_to(int k) {
    std::vector<BinaryWord> out;
    out.push_back({0, 0});
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].len == k) continue;
        out.push_back(out[i].child(0));
        out.push_back(out[i].child(1));
    }
    std::sort(out.begin(), out.end(), [](const BinaryWord& a, const BinaryWord& b) {
        return binary_word_index(a) < binary_word_index(b);
    });
    return out;
}

/// Path P_k: vertices v0..vk, edges v_{i-1}v_i.
inline Graph build_path(int k) {
    require(k >= 1, Errc::invalid_parameter, "path length must be >= 1");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= k; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= k; ++i) edges.emplace_back(i - 1, i);
    return Graph(std::move(labels), edges);
}

/// Cycle C_k: k vertices v0..v_{k-1}.
inline Graph build_cycle(int k) {
    require(k >= 3, Errc::invalid_parameter, "cycle length must be >= 3");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(std::move(labels), edges);
}

/// Complete graph K_k on vertices v0..v_{k-1}.
inline Graph build_complete(int k) {
    require(k >= 1, Errc::invalid_parameter, "complete graph needs k >= 1");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Graph(std::move(labels), edges);
}

/// Binary tree B_k of height k: 2^{k+1}-1 vertices labelled by their words
/// (root = ""). Vertex indices follow binary_word_index.
inline Graph build_binary_tree(int k) {
    require(k >= 1, Errc::invalid_parameter, "binary tree height must be >= 1");
    require(k <= 20, Errc::too_large, "binary tree height capped at 20");
    auto words = binary_words_up_to(k);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    labels.reserve(words.size());
    for (const auto& w : words) {
        labels.push_back(w.str());
        if (w.len > 0) edges.emplace_back(binary_word_index(w.parent()), binary_word_index(w));
    }
    return Graph(std::move(labels), edges);
}

/// Hamming cube H_k as a graph: 2^k vertices labelled by k-bit strings
/// (character i-1 is coordinate i), edges between strings differing in one
/// coordinate.
inline Graph build_hamming_graph(int k) {
    require(k >= 1, Errc::invalid_parameter, "hamming cube needs k >= 1");
    require(k <= 20, Errc::too_large, "hamming cube capped at k = 20 (2^k vertices)");
    const int n = 1 << k;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int mask = 0; mask < n; ++mask) {
        std::string s(static_cast<std::size_t>(k), '0');
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) s[static_cast<std::size_t>(i)] = '1';
        labels.push_back(std::move(s));
    }
    std::vector<std::pair<int, int>> edges;
    for (int mask = 0; mask < n; ++mask)
        for (int i = 0; i < k; ++i)
            if (!(mask & (1 << i))) edges.emplace_back(mask, mask | (1 << i));
    return Graph(std::move(labels), edges);
}

/// Star St_{n,k} = Clo(P_k, n): n paths of length k coalesced at the
/// endvertex v0. The clover carries the branch provenance.
inline Clover star_clover(int n, int k) {
    require(n >= 1 && k >= 1, Errc::invalid_parameter, "star needs n,k >= 1");
    return build_clover(PointedGraph(build_path(k), 0), n);
}

inline Graph build_star(int n, int k) { return star_clover(n, k).pointed.graph; }

/// Rose Ro_{n,k} = Clo(C_k, n): n k-cycles coalesced at v0.
inline Clover rose_clover(int n, int k) {
    require(n >= 1, Errc::invalid_parameter, "rose needs n >= 1");
    require(k >= 3, Errc::invalid_parameter, "rose cycles need k >= 3");
    return build_clover(PointedGraph(build_cycle(k), 0), n);
}

inline Graph build_rose(int n, int k) { return rose_clover(n, k).pointed.graph; }

/// Binary tree with variable-size legs: each level-j edge of B_k (the edge
/// whose far endpoint sits at depth j) is replaced by a path of length
/// legs[j-1]. Total length is the sum of the legs.
inline Graph build_variable_leg_tree(const std::vector<int>& legs) {
    require(!legs.empty(), Errc::invalid_parameter, "legs sequence must be nonempty");
    const int k = static_cast<int>(legs.size());
    require(k <= 20, Errc::too_large, "variable-leg tree height capped at 20");
    for (int l : legs)
        require(l >= 1, Errc::invalid_parameter, "every leg must be >= 1");

    auto words = binary_words_up_to(k);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> word_vertex(words.size(), -1);

    for (std::size_t i = 0; i < words.size(); ++i) {
        word_vertex[i] = static_cast<int>(labels.size());
        labels.push_back(words[i].str());
        if (words[i].len == 0) continue;
        // subdivide the edge parent -> word into a path of length legs[level-1]
        const int leg = legs[static_cast<std::size_t>(words[i].len - 1)];
        int prev = word_vertex[static_cast<std::size_t>(binary_word_index(words[i].parent()))];
        for (int step = 1; step < leg; ++step) {
            int mid = static_cast<int>(labels.size());
            labels.push_back(words[i].str() + ":" + std::to_string(step));
            edges.emplace_back(prev, mid);
            prev = mid;
        }
        edges.emplace_back(prev, word_vertex[i]);
    }
    return Graph(std::move(labels), edges);
}

} // namespace lamplight
