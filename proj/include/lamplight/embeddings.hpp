#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "lamplight/families.hpp"
#include "lamplight/graph.hpp"
#include "lamplight/hamming.hpp"
#include "lamplight/lamplighter.hpp"
#include "lamplight/tree.hpp"

namespace lamplight {

struct EuclideanPoint {
    std::vector<double> coordinates;
};

enum class NormP { l1, l2, linf };

inline const char* norm_name(NormP p) {
    switch (p) {
        case NormP::l1:   return "1";
        case NormP::l2:   return "2";
        case NormP::linf: return "inf";
    }
    return "?";
}

inline double norm_dist(const EuclideanPoint& a, const EuclideanPoint& b, NormP p) {
    require(a.coordinates.size() == b.coordinates.size(), Errc::invalid_parameter,
            "dimension mismatch");
    double acc = 0;
    for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
        double d = std::abs(a.coordinates[i] - b.coordinates[i]);
        switch (p) {
            case NormP::l1:   acc += d; break;
            case NormP::l2:   acc += d * d; break;
            case NormP::linf: acc = std::max(acc, d); break;
        }
    }
    return p == NormP::l2 ? std::sqrt(acc) : acc;
}

/// La(P_k) -> B_{k+1} x B_{k+1}: the lamp configuration read leftward from
/// the lamplighter (first factor) and rightward from the far end (second
/// factor). Claimed bounds (2/3, 2) on the product metric.
struct PathToTrees {
    int k;

    explicit PathToTrees(int path_length) : k(path_length) {
        require(k >= 1, Errc::invalid_parameter, "path length must be >= 1");
    }

    // state over P_k with position v_m
    std::pair<BinaryWord, BinaryWord> map(const LampState& s) const {
        const int m = s.pos;
        BinaryWord left, right;
        for (int i = 1; i <= m; ++i) left = left.child(s.lamps.test(static_cast<std::size_t>(i - 1)));
        for (int i = 0; i <= k - m; ++i)
            right = right.child(s.lamps.test(static_cast<std::size_t>(k - i)));
        return {left, right};
    }

    static int target_dist(const std::pair<BinaryWord, BinaryWord>& a,
                           const std::pair<BinaryWord, BinaryWord>& b) {
        return binary_tree_dist(a.first, b.first) + binary_tree_dist(a.second, b.second);
    }
};

/// The cube coordinates capturing 2|[x, A^B] \ [x,y]| up to a factor of two:
/// coordinate (e, C) is lit iff C = A_{x,e} != {} where A_{x,e} is the part
/// of A behind edge e seen from x. Support size is exactly |[x,A]|.
inline HammingPoint hamming_coordinates(const Graph& t, const LampState& s) {
    require_tree(t);
    RootedTree rt(t, s.pos);
    // A_{x,e} for every edge e on some path [x,a], a in A
    std::map<int, std::vector<int>> behind;
    for (auto a = s.lamps.find_first(); a != VertexSet::npos; a = s.lamps.find_next(a)) {
        for (int w = static_cast<int>(a); w != s.pos; w = rt.parent[static_cast<std::size_t>(w)])
            behind[rt.edge_up[static_cast<std::size_t>(w)]].push_back(static_cast<int>(a));
    }
    std::vector<std::string> keys;
    keys.reserve(behind.size());
    for (auto& [e, members] : behind) {
        std::sort(members.begin(), members.end());
        auto [u, v] = t.edge_endpoints(e);
        std::string key = "F:" + t.label(u) + "~" + t.label(v) + "|";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) key += ",";
            key += t.label(members[i]);
        }
        keys.push_back(std::move(key));
    }
    return HammingPoint::from_keys(std::move(keys));
}

/// The full tree embedding F(A,x) = (f(A,x), [x0,x], A) into one Hamming
/// cube over three disjoint key namespaces. Claimed bounds (1/2, 3).
struct TreeToHamming {
    Graph tree;
    int basepoint;

    TreeToHamming(Graph t, int x0) : tree(std::move(t)), basepoint(x0) {
        require_tree(tree);
        require(x0 >= 0 && x0 < tree.vertex_count(), Errc::unknown_vertex, "basepoint");
    }

    HammingPoint map(const LampState& s) const {
        HammingPoint f = hamming_coordinates(tree, s);
        auto keys = std::move(f.coords);
        EdgeSet anchor = path_edge_set(tree, basepoint, s.pos);
        for (auto e = anchor.find_first(); e != EdgeSet::npos; e = anchor.find_next(e)) {
            auto [u, v] = tree.edge_endpoints(static_cast<int>(e));
            keys.push_back("E:" + tree.label(u) + "~" + tree.label(v));
        }
        for (auto a = s.lamps.find_first(); a != VertexSet::npos; a = s.lamps.find_next(a))
            keys.push_back("V:" + tree.label(static_cast<int>(a)));
        return HammingPoint::from_keys(std::move(keys));
    }
};

/// B_k -> La(P_k): word epsilon goes to lamps {v_{s-1} : eps_s = 1} with the
/// lamplighter parked at v_{|eps|}. Claimed bounds (1, 2).
struct BinaryToLampPath {
    int k;
    Graph path;

    explicit BinaryToLampPath(int height) : k(height), path(build_path(height)) {}

    LampState map(const BinaryWord& w) const {
        require(w.len <= k, Errc::invalid_parameter, "word longer than the tree height");
        LampState s{path.empty_vertex_set(), w.len};
        for (int i = 1; i <= w.len; ++i)
            if (w.bit(i)) s.lamps.set(static_cast<std::size_t>(i - 1));
        return s;
    }
};

/// H_k -> La(K_{km}): subset I lights the union of the blocks V_i, i in I,
/// with the lamplighter parked at v0 in V_1. Exact sandwich
/// 2m d_H <= d_La <= 2m d_H + 1; claimed multiplicative bounds (2m, 2m+1).
struct HammingToLampComplete {
    int k, m;
    Graph complete; // K_{km}; block V_i = {(i-1)m .. im-1}, v0 = vertex 0

    HammingToLampComplete(int cube_dim, int block_size)
        : k(cube_dim), m(block_size), complete(build_complete(cube_dim * block_size)) {
        require(k >= 1 && m >= 1, Errc::invalid_parameter, "need k,m >= 1");
    }

    LampState map(std::uint32_t subset) const {
        require(subset < (std::uint32_t{1} << k), Errc::invalid_parameter, "subset out of range");
        LampState s{complete.empty_vertex_set(), 0};
        for (int i = 0; i < k; ++i)
            if (subset >> i & 1)
                for (int j = 0; j < m; ++j) s.lamps.set(static_cast<std::size_t>(i * m + j));
        return s;
    }
};

/// K_k -> B_{s+t}: the i-th vertex goes to the all-zeros leaf of the i-th
/// height-t subtree (in subtree order) hanging off the leaves of B_s. The
/// parameters follow n >= log2(k)(1+eps)/eps with s minimal such that
/// 2^s >= k and t = n - s, which keeps (s+t)/(t+1) < 1+eps. All image
/// distances lie in [2t+2, 2(s+t)].
struct CompleteToBinary {
    int k;
    double eps;
    int s = 0, t = 0;
    std::vector<BinaryWord> leaves;

    CompleteToBinary(int clique, double eps_slack) : k(clique), eps(eps_slack) {
        require(k >= 1, Errc::invalid_parameter, "need k >= 1");
        require(eps > 0, Errc::invalid_parameter, "need eps > 0");
        while ((1 << s) < k) ++s;
        if (k > 1) {
            double needed = std::log2(static_cast<double>(k)) * (1.0 + eps) / eps;
            int n = static_cast<int>(std::ceil(needed - 1e-9));
            t = std::max(1, n - s);
        }
        for (int i = 0; i < k; ++i) {
            BinaryWord w;
            for (int b = s - 1; b >= 0; --b) w = w.child((i >> b) & 1);
            for (int b = 0; b < t; ++b) w = w.child(0);
            leaves.push_back(w);
        }
    }

    int height() const { return s + t; }
    double distortion_bound() const { return t + s == 0 ? 1.0 : double(s + t) / double(t + 1); }

    BinaryWord map(int vertex) const {
        require(vertex >= 0 && vertex < k, Errc::unknown_vertex, "clique vertex");
        return leaves[static_cast<std::size_t>(vertex)];
    }
};

/// St_{n,k} into an n-dimensional normed space: x at distance d from the
/// center on branch i goes to d * e_i. The standard unit vectors are an
/// Auerbach basis for every p-norm. Claimed bounds (1/2, 1).
struct StarToNormed {
    int n, k;
    NormP p;
    Clover clover;

    StarToNormed(int branches, int branch_length, NormP norm)
        : n(branches), k(branch_length), p(norm), clover(star_clover(branches, branch_length)) {}

    const Graph& domain() const { return clover.pointed.graph; }

    EuclideanPoint map(int vertex) const {
        EuclideanPoint pt{std::vector<double>(static_cast<std::size_t>(n), 0.0)};
        int copy = clover.copy_of[static_cast<std::size_t>(vertex)];
        if (copy >= 0)
            pt.coordinates[static_cast<std::size_t>(copy)] =
                static_cast<double>(clover.orig_of[static_cast<std::size_t>(vertex)]); // path label v_j sits at distance j from v0
        return pt;
    }

    double target_dist(const EuclideanPoint& a, const EuclideanPoint& b) const {
        return norm_dist(a, b, p);
    }
};

/// Ro_{n,k} into l_2^{2n}: each cycle copy goes to the regular k-gon of
/// radius k/4 in its own 2-dimensional block, translated so the center maps
/// to 0. Chords come out as (k/2) sin(pi j / k). Claimed bounds
/// (1/sqrt(2), pi/2) on the 2-norm.
struct RoseToEuclidean {
    int n, k;
    Clover clover;

    RoseToEuclidean(int leaves, int cycle_length)
        : n(leaves), k(cycle_length), clover(rose_clover(leaves, cycle_length)) {
        require(k >= 3, Errc::invalid_parameter, "rose cycles need k >= 3");
    }

    const Graph& domain() const { return clover.pointed.graph; }

    EuclideanPoint map(int vertex) const {
        EuclideanPoint pt{std::vector<double>(static_cast<std::size_t>(2 * n), 0.0)};
        int copy = clover.copy_of[static_cast<std::size_t>(vertex)];
        if (copy < 0) return pt;
        int j = clover.orig_of[static_cast<std::size_t>(vertex)];
        const double radius = static_cast<double>(k) / 4.0;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
        pt.coordinates[static_cast<std::size_t>(2 * copy)] = radius * (std::cos(angle) - 1.0);
        pt.coordinates[static_cast<std::size_t>(2 * copy + 1)] = radius * std::sin(angle);
        return pt;
    }

    static double target_dist(const EuclideanPoint& a, const EuclideanPoint& b) {
        return norm_dist(a, b, NormP::l2);
    }
};

/// La(G1 * G2) into La(G1) x La(G2) x Clo(G1, 2^|G2|) x Clo(G2, 2^|G1|)
/// with matched distance behaviour. The clover copies are indexed by the
/// subsets of the opposite side (lamp bitmask), so a state whose position is
/// in G1 lands in the copy indexed by its side-2 lamp set. Claimed bounds
/// (1, 2) on the 4-factor product metric.
struct CoalescenceEmbedding {
    PointedGraph g1, g2;
    Coalescence co;
    Clover clover1, clover2;

    static constexpr int kCopyCap = 10; // 2^10 clover copies

    CoalescenceEmbedding(PointedGraph a, PointedGraph b)
        : g1(std::move(a)), g2(std::move(b)), co(coalesce(g1, g2)) {
        require(g1.graph.vertex_count() <= kCopyCap && g2.graph.vertex_count() <= kCopyCap,
                Errc::too_large, "coalescence embedding capped at 2^10 clover copies");
        clover1 = build_clover(g1, 1 << g2.graph.vertex_count());
        clover2 = build_clover(g2, 1 << g1.graph.vertex_count());
    }

    struct Image {
        LampState factor1, factor2;
        int clover1_vertex = 0, clover2_vertex = 0;
    };

    // state over co.pointed.graph
    Image map(const LampState& s) const {
        LampState a1{g1.graph.empty_vertex_set(), g1.basepoint};
        LampState a2{g2.graph.empty_vertex_set(), g2.basepoint};
        std::uint32_t mask1 = 0, mask2 = 0;
        for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v)) {
            int o1 = co.to1[v], o2 = co.to2[v];
            if (o1 >= 0) {
                a1.lamps.set(static_cast<std::size_t>(o1));
                mask1 |= std::uint32_t{1} << o1;
            }
            if (o2 >= 0) {
                a2.lamps.set(static_cast<std::size_t>(o2));
                mask2 |= std::uint32_t{1} << o2;
            }
        }
        Image img;
        if (co.in_side1(s.pos)) {
            a1.pos = co.to1[static_cast<std::size_t>(s.pos)];
            img.clover1_vertex = clover1.from_copy[mask2][static_cast<std::size_t>(a1.pos)];
            img.clover2_vertex = clover2.pointed.basepoint;
        } else {
            a2.pos = co.to2[static_cast<std::size_t>(s.pos)];
            img.clover1_vertex = clover1.pointed.basepoint;
            img.clover2_vertex = clover2.from_copy[mask1][static_cast<std::size_t>(a2.pos)];
        }
        img.factor1 = std::move(a1);
        img.factor2 = std::move(a2);
        return img;
    }

    int target_dist(const Image& u, const Image& v) const {
        return lamp_distance(g1.graph, u.factor1, v.factor1) +
               lamp_distance(g2.graph, u.factor2, v.factor2) +
               clover1.pointed.graph.dist(u.clover1_vertex, v.clover1_vertex) +
               clover2.pointed.graph.dist(u.clover2_vertex, v.clover2_vertex);
    }
};

} // namespace lamplight
