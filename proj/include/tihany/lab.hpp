#ifndef TIHANY_LAB_HPP
#define TIHANY_LAB_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromatic.hpp"
#include "clique.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "splitter.hpp"

namespace tihany {

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

// Upper-triangle bits in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
// Placing vertex perm[j] at position j fixes column j, which is compared with
// column j of g; a smaller column proves g is not the minimum.
class CanonicalCheck {
public:
    explicit CanonicalCheck(const Graph& g) : g_(g) {}

    bool is_minimal() {
        if (g_.order() <= 1) return true;
        return !smaller_exists(0, g_.vertices());
    }

private:
    // -1: permuted column is smaller, 0: equal, 1: larger
    int compare_column(int j) const {
        for (int i = 0; i < j; ++i) {
            const bool permuted = g_.adjacent(perm_[i], perm_[j]);
            const bool original = g_.adjacent(i, j);
            if (permuted != original) return permuted ? 1 : -1;
        }
        return 0;
    }

    bool smaller_exists(int pos, VertexSet open) {
        if (pos == g_.order()) return false;
        for (int v : open) {
            perm_[pos] = v;
            const int cmp = compare_column(pos);
            if (cmp < 0) return true;
            if (cmp == 0 && smaller_exists(pos + 1, open - VertexSet::single(v))) return true;
        }
        return false;
    }

    const Graph& g_;
    std::array<int, kMaxVertices> perm_{};
};

} // namespace detail

/// True iff g's adjacency string is the minimum over all relabellings.
inline bool is_canonical(const Graph& g) { return detail::CanonicalCheck(g).is_minimal(); }

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kExhaustiveLimit = 10;
inline constexpr int kDedupLimit = 8;

/// Restricts an enumeration to every `count`-th subtree at a fixed depth.
struct EnumerationSlice {
    int index = 0;
    int count = 1;
};

namespace detail {

template <typename Visit>
class Alpha2Enumerator {
public:
    Alpha2Enumerator(int n, bool dedup, EnumerationSlice slice, Visit& visit)
        : n_(n), dedup_(dedup), slice_(slice), visit_(visit), h_(n) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
        split_depth_ = std::min<int>(static_cast<int>(pairs_.size()), 10);
    }

    long long run() {
        descend(0, 0);
        return emitted_;
    }

private:
    void descend(std::size_t k, int edges) {
        if (static_cast<int>(k) == split_depth_ && slice_.count > 1) {
            if (subtree_++ % slice_.count != static_cast<std::uint64_t>(slice_.index)) return;
        }
        if (k == pairs_.size()) {
            if (edges == 0) return;
            const Graph g = complement(h_);
            if (dedup_ && !is_canonical(g)) return;
            ++emitted_;
            visit_(g);
            return;
        }
        const auto [i, j] = pairs_[k];
        descend(k + 1, edges);
        if (!h_.neighbors(i).intersects(h_.neighbors(j))) {
            h_.set_edge_unchecked(i, j);
            descend(k + 1, edges + 1);
            h_.clear_edge_unchecked(i, j);
        }
    }

    int n_;
    bool dedup_;
    EnumerationSlice slice_;
    Visit& visit_;
    Graph h_; ///< complement under construction
    std::vector<std::pair<int, int>> pairs_;
    int split_depth_ = 0;
    std::uint64_t subtree_ = 0;
    long long emitted_ = 0;
};

} // namespace detail

/// Calls visit(g) for every labelled graph g on n vertices with alpha(g) = 2,
/// i.e. every triangle-free complement with at least one edge. Complement
/// edges are decided in column order and a pair is only included when it
/// closes no triangle. With dedup, only canonical representatives are visited.
template <typename Visit>
long long enumerate_alpha2(int n, bool dedup, Visit&& visit, EnumerationSlice slice = {}) {
    if (n < 0 || n > kExhaustiveLimit)
        throw Error(ErrorCode::TooLarge, "exhaustive enumeration supports n <= " + std::to_string(kExhaustiveLimit));
    if (dedup && n > kDedupLimit)
        throw Error(ErrorCode::TooLarge, "isomorphism dedup supports n <= " + std::to_string(kDedupLimit));
    detail::Alpha2Enumerator<std::remove_reference_t<Visit>> e(n, dedup, slice, visit);
    return e.run();
}

inline std::vector<Graph> enumerate_alpha2(int n, bool dedup) {
    std::vector<Graph> out;
    enumerate_alpha2(n, dedup, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------
// Random instances

namespace detail {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// Random maximal triangle-free graph (pairs in random order, each added
/// unless it closes a triangle); with probability 1/2 a random subset of its
/// edges is then dropped, keeping at least one. Returns the triangle-free graph.
inline Graph random_maximal_triangle_free(int n, std::uint64_t seed) {
    Graph h(n);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    for (std::size_t k = pairs.size(); k > 1; --k) std::swap(pairs[k - 1], pairs[detail::uniform_below(rng, k)]);

    std::vector<std::pair<int, int>> kept;
    for (auto [i, j] : pairs) {
        if (h.neighbors(i).intersects(h.neighbors(j))) continue;
        h.set_edge_unchecked(i, j);
        kept.emplace_back(i, j);
    }
    if (!kept.empty() && detail::uniform_below(rng, 2) == 1) {
        const auto drop_percent = detail::uniform_below(rng, 51);
        int remaining = static_cast<int>(kept.size());
        for (auto [i, j] : kept) {
            if (detail::uniform_below(rng, 100) < drop_percent) {
                h.clear_edge_unchecked(i, j);
                --remaining;
            }
        }
        if (remaining == 0) h.set_edge_unchecked(kept.front().first, kept.front().second);
    }
    return h;
}

/// Complement of random_maximal_triangle_free(n, seed); alpha <= 2 always and
/// alpha = 2 whenever n >= 2.
inline Graph random_alpha2(int n, std::uint64_t seed) { return complement(random_maximal_triangle_free(n, seed)); }

// ---------------------------------------------------------------------------
// Extremal examples

/// K_{s+t-4} joined with C5: alpha 2, omega s+t-2, chi s+t-1, not (s,t+1)-splittable.
inline Graph example1(int s, int t) {
    if (!(t >= s && s >= 2 && s + t >= 4))
        throw Error(ErrorCode::BadParameters, "example1 needs t >= s >= 2");
    return join(complete_graph(s + t - 4), cycle_graph(5));
}

/// K_{s+t-7} joined with two copies of C5: alpha 2, omega s+t-3, chi s+t-1, not (s,t+2)-splittable.
inline Graph example2(int s, int t) {
    if (!(t >= s && s >= 2 && s + t >= 7))
        throw Error(ErrorCode::BadParameters, "example2 needs t >= s >= 2 and s+t >= 7");
    return join(join(complete_graph(s + t - 7), cycle_graph(5)), cycle_graph(5));
}

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepMode { Exhaustive, Random };

inline constexpr int kExhaustiveSweepLimit = 9;

struct SweepOptions {
    int n_min = 1;
    int n_max = 7;
    SweepMode mode = SweepMode::Exhaustive;
    long long budget = 1000; ///< instances drawn in random mode
    std::uint64_t seed = 1;
    int threads = 1;
    SplitOptions split;
};

struct FailureRecord {
    std::string graph6;
    int s = 0;
    int t = 0;
    std::string reason;

    bool operator==(const FailureRecord&) const = default;
};

struct SweepReport {
    int n_min = 0;
    int n_max = 0;
    SweepMode mode = SweepMode::Exhaustive;
    long long graphs_checked = 0;
    /// (g, s, t) triples with t >= s >= 2 and s+t-1 = chi(g)
    long long instance_count = 0;
    /// triples that also satisfy chi > omega+1
    long long hypothesis_instances = 0;
    std::map<Branch, long long> branch_histogram;
    std::vector<FailureRecord> failures;
    std::chrono::duration<double> wall_time{0};

    bool confirmed() const { return failures.empty(); }

    void merge(const SweepReport& other) {
        graphs_checked += other.graphs_checked;
        instance_count += other.instance_count;
        hypothesis_instances += other.hypothesis_instances;
        for (auto [b, c] : other.branch_histogram) branch_histogram[b] += c;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

struct InstanceOutcome {
    std::optional<Branch> branch; ///< set when a certificate re-verified
    std::optional<std::string> failure;
};

/// split() followed by verify_certificate(); anything else is a failure reason.
inline InstanceOutcome run_instance(const Graph& g, int s, int t, const SplitOptions& options) {
    InstanceOutcome out;
    try {
        const SplitCertificate cert = split({g, s, t}, options);
        const VerificationResult check = verify_certificate(g, s, t, cert);
        if (check.ok) {
            out.branch = cert.trace.branch;
        } else {
            std::string why = "certificate failed re-verification:";
            for (const auto& v : check.violations) why += " " + v + ";";
            out.failure = why;
        }
    } catch (const Error& e) {
        out.failure = std::string(to_string(e.code()));
        if (e.code() == ErrorCode::TooLarge) out.failure = *out.failure + ": constructions failed above the fallback limit";
    }
    return out;
}

/// Feeds a recorded failure back through split() and returns the reason it produces now (empty when it succeeds).
inline std::string replay(const FailureRecord& record, const SplitOptions& options = {}) {
    const Graph g = parse_graph6(record.graph6);
    const auto outcome = run_instance(g, record.s, record.t, options);
    return outcome.failure.value_or("");
}

namespace detail {

inline void sweep_graph(const Graph& g, const SplitOptions& options, SweepReport& report) {
    ++report.graphs_checked;
    const Graph comp = complement(g);
    if (comp.edge_count() == 0 || !is_triangle_free(comp)) return; // alpha != 2
    const int n = g.order();
    const int chi = n - matching_number_within(comp, comp.vertices());
    const int omega = clique_number(g);
    for (int s = 2; 2 * s <= chi + 1; ++s) {
        const int t = chi + 1 - s;
        ++report.instance_count;
        if (!(chi > omega + 1)) continue;
        ++report.hypothesis_instances;
        const auto outcome = run_instance(g, s, t, options);
        if (outcome.branch) ++report.branch_histogram[*outcome.branch];
        if (outcome.failure) report.failures.push_back({serialize_graph6(g), s, t, *outcome.failure});
    }
}

inline SweepReport sweep_worker(const SweepOptions& opt, int worker) {
    SweepReport report;
    if (opt.mode == SweepMode::Exhaustive) {
        for (int n = opt.n_min; n <= opt.n_max; ++n)
            enumerate_alpha2(n, false, [&](const Graph& g) { sweep_graph(g, opt.split, report); },
                             EnumerationSlice{worker, opt.threads});
    } else {
        for (long long i = worker; i < opt.budget; i += opt.threads) {
            const std::uint64_t seed = mix_seed(opt.seed, static_cast<std::uint64_t>(i));
            std::mt19937_64 rng(seed);
            const int n = opt.n_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(opt.n_max - opt.n_min + 1)));
            sweep_graph(random_alpha2(n, rng()), opt.split, report);
        }
    }
    return report;
}

} // namespace detail

/// For every generated g and every (s,t) with t >= s >= 2, s+t-1 = chi(g) and
/// chi(g) > omega(g)+1, runs split() and re-verifies the certificate.
/// Failures are collected, sorted by (graph6, s, t).
inline SweepReport sweep(const SweepOptions& opt) {
    if (opt.n_min < 1 || opt.n_min > opt.n_max)
        throw Error(ErrorCode::BadParameters, "need 1 <= n_min <= n_max");
    if (opt.mode == SweepMode::Exhaustive && opt.n_max > kExhaustiveSweepLimit)
        throw Error(ErrorCode::BadParameters,
                    "exhaustive sweep supports n <= " + std::to_string(kExhaustiveSweepLimit));
    if (opt.n_max > kMaxVertices) throw Error(ErrorCode::TooLarge, "n_max above the vertex cap");
    if (opt.threads < 1) throw Error(ErrorCode::BadParameters, "threads must be positive");

    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.n_min = opt.n_min;
    report.n_max = opt.n_max;
    report.mode = opt.mode;
    if (opt.threads == 1) {
        report.merge(detail::sweep_worker(opt, 0));
    } else {
        std::vector<SweepReport> parts(static_cast<std::size_t>(opt.threads));
        std::vector<std::thread> workers;
        for (int w = 0; w < opt.threads; ++w)
            workers.emplace_back([&, w] { parts[static_cast<std::size_t>(w)] = detail::sweep_worker(opt, w); });
        for (auto& th : workers) th.join();
        for (const auto& part : parts) report.merge(part);
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const FailureRecord& a, const FailureRecord& b) {
        return std::tie(a.graph6, a.s, a.t) < std::tie(b.graph6, b.s, b.t);
    });
    report.wall_time = std::chrono::steady_clock::now() - start;
    return report;
}

/// One JSON line per failure, then a summary line. Wall time is left out so
/// identical sweeps serialize identically.
inline std::string sweep_report_lines(const SweepReport& report) {
    std::string out;
    for (const auto& f : report.failures) {
        nlohmann::ordered_json j;
        j["kind"] = "failure";
        j["graph"] = f.graph6;
        j["s"] = f.s;
        j["t"] = f.t;
        j["reason"] = f.reason;
        out += j.dump() + "\n";
    }
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (Branch b : kAllBranches) {
        auto it = report.branch_histogram.find(b);
        hist[std::string(to_string(b))] = it == report.branch_histogram.end() ? 0 : it->second;
    }
    nlohmann::ordered_json summary;
    summary["kind"] = "summary";
    summary["mode"] = report.mode == SweepMode::Exhaustive ? "exhaustive" : "random";
    summary["n_min"] = report.n_min;
    summary["n_max"] = report.n_max;
    summary["graphs_checked"] = report.graphs_checked;
    summary["instance_count"] = report.instance_count;
    summary["hypothesis_instances"] = report.hypothesis_instances;
    summary["branch_histogram"] = hist;
    summary["failures"] = report.failures.size();
    summary["confirmed"] = report.confirmed();
    out += summary.dump() + "\n";
    return out;
}

inline FailureRecord failure_from_json(std::string_view line) {
    try {
        const auto j = nlohmann::ordered_json::parse(line);
        return {j.at("graph").get<std::string>(), j.at("s").get<int>(), j.at("t").get<int>(),
                j.at("reason").get<std::string>()};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedInput, std::string("failure record: ") + e.what());
    }
}

} // namespace tihany

#endif // TIHANY_LAB_HPP
