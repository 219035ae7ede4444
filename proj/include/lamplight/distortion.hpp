#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "lamplight/error.hpp"
#include "lamplight/graph.hpp"
#include "lamplight/lamplighter.hpp"
#include "lamplight/rng.hpp"

namespace lamplight {

/// Exact nonnegative ratio num/den; den == 0 encodes +infinity.
struct Fraction {
    long long num = 0;
    long long den = 1;

    double value() const {
        return den == 0 ? std::numeric_limits<double>::infinity()
                        : static_cast<double>(num) / static_cast<double>(den);
    }
    bool infinite() const { return den == 0; }
};

inline bool fraction_less(const Fraction& a, const Fraction& b) {
    if (a.den == 0) return false;
    if (b.den == 0) return true;
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

struct WitnessPair {
    std::string u, v;
    double src = 0, tgt = 0;
};

struct DistortionReport {
    std::string map_name;
    std::size_t domain_size = 0;
    std::uint64_t pairs = 0;
    double lipschitz = 0;   // sup d_tgt / d_src
    double colipschitz = 0; // inf d_tgt / d_src
    double distortion = 0;  // sup(d_tgt/d_src) * sup(d_src/d_tgt)
    bool lipschitz_infinite = false;
    double claimed_a = 0, claimed_b = 0;
    double tol = 0;
    bool pass = false;
    std::vector<WitnessPair> witnesses; // extremal pairs, sup first
};

/// Type-erased certification input: an enumerable point domain with a source
/// and a target metric, plus the claimed two-sided bounds. When both metrics
/// are integral the sweep keeps exact integer ratios.
struct CertifyInput {
    std::string map_name;
    std::size_t domain_size = 0;
    std::function<std::string(std::size_t)> describe;
    std::function<double(std::size_t, std::size_t)> src_dist;
    std::function<double(std::size_t, std::size_t)> tgt_dist;
    bool integral = true;
    double claimed_a = 0, claimed_b = 0;
    Fraction claimed_a_exact{0, 1}, claimed_b_exact{0, 1}; // meaningful when integral
};

enum class CertifyMode { exhaustive, sampled };

inline unsigned certify_worker_count(std::uint64_t pair_count) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LAMPLIGHT_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    if (pair_count < (1u << 15)) return 1;
    return hw;
}

namespace detail {

struct Extremum {
    Fraction frac{0, 1};
    double real = 0;
    std::size_t u = 0, v = 0;
    double src = 0, tgt = 0;
    bool set = false;

    // -1 / 0 / +1 comparison of the ratio, exact or floating
    int cmp(bool integral, const Extremum& other) const {
        if (integral) {
            if (fraction_less(frac, other.frac)) return -1;
            if (fraction_less(other.frac, frac)) return 1;
            return 0;
        }
        if (real < other.real) return -1;
        if (real > other.real) return 1;
        return 0;
    }

    bool pair_before(const Extremum& other) const {
        return u != other.u ? u < other.u : v < other.v;
    }
};

struct SweepState {
    Extremum hi, lo;
    std::uint64_t pairs = 0;

    // keep `cand` if its ratio is strictly more extreme, or equal with a
    // lexicographically smaller pair; witnesses then never depend on the
    // worker count
    static void consider(bool integral, Extremum& slot, const Extremum& cand, int want) {
        if (!cand.set) return;
        if (!slot.set) {
            slot = cand;
            return;
        }
        int c = cand.cmp(integral, slot);
        if (c == want || (c == 0 && cand.pair_before(slot))) slot = cand;
    }

    void feed(const CertifyInput& in, std::size_t i, std::size_t j) {
        const double s = in.src_dist(i, j);
        const double t = in.tgt_dist(i, j);
        ++pairs;
        if (s == 0 && t == 0) return; // identical points, no ratio
        Extremum e;
        e.u = i;
        e.v = j;
        e.src = s;
        e.tgt = t;
        e.set = true;
        if (in.integral)
            e.frac = Fraction{static_cast<long long>(t + 0.5), static_cast<long long>(s + 0.5)};
        else
            e.real = s == 0 ? std::numeric_limits<double>::infinity() : t / s;
        consider(in.integral, hi, e, 1);
        consider(in.integral, lo, e, -1);
    }

    void merge(const CertifyInput& in, const SweepState& other) {
        pairs += other.pairs;
        consider(in.integral, hi, other.hi, 1);
        consider(in.integral, lo, other.lo, -1);
    }
};

} // namespace detail

/// Sweeps point pairs and reports measured Lipschitz / co-Lipschitz ratios
/// against the claimed bounds. Deterministic for a given mode and seed; the
/// exhaustive sweep shards rows across workers (LAMPLIGHT_THREADS caps the
/// count) and merges by max/min, so the verdict is schedule-independent.
inline DistortionReport certify(const CertifyInput& in, CertifyMode mode,
                                std::uint64_t sample_pairs = 0, std::uint64_t seed = 0,
                                double tol = -1) {
    require(in.domain_size >= 2, Errc::degenerate_domain,
            "certification needs at least two points");
    if (tol < 0) tol = in.integral ? 0.0 : 1e-9;

    const std::size_t n = in.domain_size;
    detail::SweepState total;

    if (mode == CertifyMode::exhaustive) {
        const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const unsigned workers = certify_worker_count(pair_count);
        if (workers <= 1) {
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) total.feed(in, i, j);
        } else {
            std::vector<detail::SweepState> parts(workers);
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i + 1 < n; i += workers)
                        for (std::size_t j = i + 1; j < n; ++j) parts[w].feed(in, i, j);
                });
            }
            for (auto& th : pool) th.join();
            for (unsigned w = 0; w < workers; ++w) total.merge(in, parts[w]);
        }
    } else {
        require(sample_pairs > 0, Errc::invalid_parameter, "sampled mode needs a pair budget");
        Rng rng(seed);
        for (std::uint64_t p = 0; p < sample_pairs; ++p) {
            std::size_t i = static_cast<std::size_t>(uniform_below(rng, n));
            std::size_t j = static_cast<std::size_t>(uniform_below(rng, n - 1));
            if (j >= i) ++j;
            total.feed(in, std::min(i, j), std::max(i, j));
        }
    }

    DistortionReport rep;
    rep.map_name = in.map_name;
    rep.domain_size = n;
    rep.pairs = total.pairs;
    rep.claimed_a = in.claimed_a;
    rep.claimed_b = in.claimed_b;
    rep.tol = tol;
    require(total.hi.set, Errc::degenerate_domain, "all evaluated pairs were identical points");

    bool pass_lower, pass_upper;
    if (in.integral) {
        rep.lipschitz = total.hi.frac.value();
        rep.colipschitz = total.lo.frac.value();
        rep.lipschitz_infinite = total.hi.frac.infinite();
        // verdict by exact cross-multiplication
        pass_lower = !fraction_less(total.lo.frac, in.claimed_a_exact);
        pass_upper = !fraction_less(in.claimed_b_exact, total.hi.frac);
    } else {
        rep.lipschitz = total.hi.real;
        rep.colipschitz = total.lo.real;
        rep.lipschitz_infinite = std::isinf(total.hi.real);
        pass_lower = rep.colipschitz >= in.claimed_a - tol;
        pass_upper = rep.lipschitz <= in.claimed_b + tol;
    }
    rep.distortion = rep.lipschitz_infinite || rep.colipschitz == 0
                         ? std::numeric_limits<double>::infinity()
                         : rep.lipschitz / rep.colipschitz;
    rep.pass = pass_lower && pass_upper;

    rep.witnesses.push_back(
        {in.describe(total.hi.u), in.describe(total.hi.v), total.hi.src, total.hi.tgt});
    if (total.lo.u != total.hi.u || total.lo.v != total.hi.v)
        rep.witnesses.push_back(
            {in.describe(total.lo.u), in.describe(total.lo.v), total.lo.src, total.lo.tgt});
    return rep;
}

/// Every state of La(g) in canonical (lamp-mask major, position minor) order.
inline std::vector<LampState> enumerate_lamp_states(const Graph& g) {
    const int n = g.vertex_count();
    require(n <= kExplicitLamplighterCap, Errc::too_large,
            "state enumeration capped at " + std::to_string(kExplicitLamplighterCap) +
                " base vertices");
    std::vector<LampState> out;
    out.reserve(static_cast<std::size_t>(n) << n);
    const int total = n << n;
    for (int idx = 0; idx < total; ++idx) out.push_back(lamp_state_at(g, idx));
    return out;
}

/// Uniform reproducible sample of La(g) states.
inline std::vector<LampState> sample_lamp_states(const Graph& g, std::size_t count,
                                                 std::uint64_t seed) {
    const int n = g.vertex_count();
    require(n <= 63, Errc::too_large, "state sampling supports up to 63 base vertices");
    Rng rng(seed);
    std::vector<LampState> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t mask = uniform_below(rng, std::uint64_t{1} << n);
        int pos = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        LampState s{g.empty_vertex_set(), pos};
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.lamps.set(static_cast<std::size_t>(v));
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace lamplight
