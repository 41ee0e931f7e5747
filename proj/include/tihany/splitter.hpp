#ifndef TIHANY_SPLITTER_HPP
#define TIHANY_SPLITTER_HPP

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromatic.hpp"
#include "clique.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "matching.hpp"

// Splitting graphs with independence number two.
//
// For G with alpha(G) = 2 and chi(G) = s+t-1 > omega(G)+1 (t >= s >= 2) the
// cascade below builds candidate vertex sets S and accepts the first one with
// chi(G[S]) >= s and chi(G - S) >= t+1. Every chromatic number involved is
// n - nu(complement), so each candidate is checked exactly in polynomial time.
//
// All constructions work in the complement H = complement(G) relative to a
// witness P (deficiency-maximising, every component of H - P odd):
//
//   Case 1 (omega >= s):   an s-clique of G assembled from non-adjacent pairs
//                          (or a 4-independent set) of H inside components of
//                          H - P plus one vertex from each of s-4 further
//                          components; failing that, any s-clique.
//   Case 2 (omega < s):    sets meeting every component of H - P evenly, so
//                          that removing them cannot lower o(H - P), plus the
//                          neighbourhood tricks that isolate x, y (and z) in H.
//
// If every construction fails, an exhaustive search over subsets decides;
// no partition at all means the instance contradicts the splitting claim.

namespace tihany {

enum class Branch {
    Case1Sub1,
    Case1Sub2,
    Case2Prelim,
    Case2Sub1,
    Case2Sub2Contra,
    Case2Sub2Main,
    Fallback,
};

inline constexpr std::array<Branch, 7> kAllBranches = {
    Branch::Case1Sub1,       Branch::Case1Sub2,     Branch::Case2Prelim, Branch::Case2Sub1,
    Branch::Case2Sub2Contra, Branch::Case2Sub2Main, Branch::Fallback,
};

constexpr std::string_view to_string(Branch b) noexcept {
    switch (b) {
    case Branch::Case1Sub1: return "CASE1_SUB1";
    case Branch::Case1Sub2: return "CASE1_SUB2";
    case Branch::Case2Prelim: return "CASE2_PRELIM";
    case Branch::Case2Sub1: return "CASE2_SUB1";
    case Branch::Case2Sub2Contra: return "CASE2_SUB2_CONTRA";
    case Branch::Case2Sub2Main: return "CASE2_SUB2_MAIN";
    case Branch::Fallback: return "FALLBACK";
    }
    return "UNKNOWN";
}

inline Branch branch_from_string(std::string_view name) {
    for (Branch b : kAllBranches)
        if (to_string(b) == name) return b;
    throw Error(ErrorCode::MalformedInput, "unknown branch \"" + std::string(name) + "\"");
}

/// Role names a trace may use, in serialization order.
inline constexpr std::array<std::string_view, 12> kRoleNames = {
    "P", "S'", "F", "F'", "H0", "X", "Y", "U1", "U2", "L0", "pairs", "singles",
};

/// Roles only some branches may carry; every other role is shared.
inline bool role_allowed(Branch b, std::string_view role) {
    if (std::find(kRoleNames.begin(), kRoleNames.end(), role) == kRoleNames.end()) return false;
    if (role == "F") return b == Branch::Case2Sub1;
    if (role == "F'") return b == Branch::Case2Sub2Contra;
    if (role == "U1" || role == "U2" || role == "Y") return b == Branch::Case2Sub2Main;
    if (role == "H0" || role == "X" || role == "L0")
        return b == Branch::Case2Sub1 || b == Branch::Case2Sub2Contra || b == Branch::Case2Sub2Main;
    return true;
}

struct CaseTrace {
    Branch branch = Branch::Fallback;
    std::map<std::string, VertexSet> named_sets;
    std::string notes;
};

struct SplitRequest {
    Graph g;
    int s = 2;
    int t = 2;
};

struct HypothesisReport {
    int alpha = 0;
    int omega = 0;
    int chi = -1; ///< -1 when alpha >= 3 and the graph is above the brute-force limit
    bool holds = false;
    std::vector<std::string> reasons;
};

struct SplitCertificate {
    VertexSet s_side;
    VertexSet t_side;
    ChiCertificate s_evidence;
    ChiCertificate t_evidence;
    CaseTrace trace;
};

inline constexpr int kFallbackLimit = 20;

struct SplitOptions {
    int fallback_limit = kFallbackLimit;
    /// Where split() writes the audit record of a PotentialCounterexample; empty disables it.
    std::filesystem::path report_path;
};

/// A candidate s-side together with the trace that produced it.
struct Candidate {
    VertexSet s_side;
    CaseTrace trace;
};

struct CandidateList {
    std::vector<Candidate> candidates;
    std::vector<std::string> guard_failures;
};

/// One line of the cascade log: which construction ran and why it was rejected.
struct Attempt {
    Branch branch;
    std::string outcome;
    std::optional<Candidate> candidate;
};

/// Raised when no partition exists at all. The record holds graph6, (s,t) and
/// every attempted construction as a JSON document.
class CounterexampleError : public Error {
public:
    CounterexampleError(const std::string& what, std::string record)
        : Error(ErrorCode::PotentialCounterexample, what), record_(std::move(record)) {}
    const std::string& record() const noexcept { return record_; }

private:
    std::string record_;
};

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(VertexSet s) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

inline VertexSet vertex_set_from_json(const nlohmann::ordered_json& j, int n) {
    if (!j.is_array()) throw Error(ErrorCode::MalformedInput, "vertex set must be a JSON array");
    VertexSet out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, "vertex labels must be integers");
        const auto label = v.get<long long>();
        if (label < 0 || label >= n)
            throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(label) + " outside 0.." + std::to_string(n - 1));
        out.insert(static_cast<int>(label));
    }
    return out;
}

inline nlohmann::ordered_json named_sets_json(const CaseTrace& trace) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (std::string_view role : kRoleNames) {
        auto it = trace.named_sets.find(std::string(role));
        if (it != trace.named_sets.end()) out[std::string(role)] = to_json(it->second);
    }
    return out;
}

inline nlohmann::ordered_json trace_json(const CaseTrace& trace) {
    nlohmann::ordered_json j;
    j["branch"] = std::string(to_string(trace.branch));
    j["named_sets"] = named_sets_json(trace);
    j["notes"] = trace.notes;
    return j;
}

// ---------------------------------------------------------------------------
// Hypotheses

inline HypothesisReport check_hypotheses(const SplitRequest& req) {
    HypothesisReport rep;
    const Graph& g = req.g;
    rep.alpha = independence_number(g);
    rep.omega = clique_number(g);
    if (rep.alpha <= 2)
        rep.chi = chi_alpha2(g).chi;
    else if (g.order() <= kBruteforceChiLimit)
        rep.chi = chi_bruteforce(g);

    if (!(req.t >= req.s && req.s >= 2))
        rep.reasons.push_back("need t >= s >= 2, got s=" + std::to_string(req.s) + " t=" + std::to_string(req.t));
    if (rep.alpha != 2) rep.reasons.push_back("alpha = " + std::to_string(rep.alpha) + ", need 2");
    if (rep.chi != req.s + req.t - 1)
        rep.reasons.push_back("chi = " + (rep.chi < 0 ? std::string("unknown") : std::to_string(rep.chi)) +
                              ", need s+t-1 = " + std::to_string(req.s + req.t - 1));
    if (!(rep.chi > rep.omega + 1))
        rep.reasons.push_back("chi = " + std::to_string(rep.chi) + " is not > omega+1 = " +
                              std::to_string(rep.omega + 1));
    rep.holds = rep.reasons.empty();
    return rep;
}

namespace detail {

// Shared view of the instance: complement, witness P and the (odd) components of complement - P.
struct SplitContext {
    SplitContext(const Graph& graph, int s_, int t_, VertexSet p_)
        : g(graph), comp(complement(graph)), s(s_), t(t_), p(p_),
          comps(components_within(comp, graph.vertices() - p_)) {}

    const Graph& g;
    Graph comp;
    int s;
    int t;
    VertexSet p;
    std::vector<VertexSet> comps;
};

inline Error guard_failed(std::string_view construction, const std::string& why) {
    return Error(ErrorCode::GuardFailed, std::string(construction) + ": " + why);
}

// Lexicographically first pair of vertices of `within` that are not adjacent in h.
inline std::optional<VertexSet> non_adjacent_pair(const Graph& h, VertexSet within) {
    for (int v : within) {
        const VertexSet others = within - h.neighbors(v) - VertexSet::first(v + 1);
        if (!others.empty()) return VertexSet{v, others.front()};
    }
    return std::nullopt;
}

// Lowest vertex of each of the first `count` components not in `skip`.
inline std::optional<VertexSet> one_from_each(const std::vector<VertexSet>& comps, const std::vector<std::size_t>& skip,
                                              int count) {
    VertexSet out;
    for (std::size_t i = 0; i < comps.size() && out.size() < count; ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.insert(comps[i].front());
    if (out.size() < count) return std::nullopt;
    return out;
}

// Adds pairs of unused vertices, both members from the same component, until
// |chosen| == target. Each component keeps at least `reserve` of its open
// vertices back.
inline VertexSet add_pairs(const std::vector<VertexSet>& comps, VertexSet forbidden, VertexSet& chosen, int target,
                           int reserve) {
    VertexSet added;
    for (VertexSet c : comps) {
        VertexSet open = c - forbidden - chosen;
        int budget = open.size() - reserve;
        while (budget >= 2 && chosen.size() + 2 <= target) {
            const int a = open.front();
            open.erase(a);
            const int b = open.front();
            open.erase(b);
            chosen |= VertexSet{a, b};
            added |= VertexSet{a, b};
            budget -= 2;
        }
    }
    return added;
}

inline std::string positional_note(std::initializer_list<std::pair<const char*, int>> roles) {
    std::string out;
    for (auto [name, v] : roles) {
        if (v < 0) continue;
        if (!out.empty()) out += ' ';
        out += std::string(name) + "=" + std::to_string(v);
    }
    return out;
}

inline std::vector<std::size_t> non_singleton_components(const SplitContext& ctx) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ctx.comps.size(); ++i)
        if (non_adjacent_pair(ctx.comp, ctx.comps[i])) out.push_back(i);
    return out;
}

// First component of complement - P with an independent 4-set, and that set.
inline std::optional<std::pair<std::size_t, std::array<int, 4>>> find_h0(const SplitContext& ctx) {
    for (std::size_t i = 0; i < ctx.comps.size(); ++i) {
        if (ctx.comps[i].size() < 4) continue;
        const auto sub = induced(ctx.comp, ctx.comps[i]);
        const auto found = search_independent_set(sub.graph, 4);
        if (!found.set) continue;
        const auto members = sub.to_parent(*found.set).to_vector();
        return std::pair{i, std::array<int, 4>{members[0], members[1], members[2], members[3]}};
    }
    return std::nullopt;
}

// Role assignments (x, y, z, w) of an independent 4-set; the ascending order comes first.
inline std::vector<std::array<int, 4>> role_assignments(const std::array<int, 4>& indep) {
    std::vector<std::array<int, 4>> out;
    for (int wi = 3; wi >= 0; --wi) {
        std::array<int, 3> rest{};
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != wi) rest[k++] = indep[i];
        for (int xi = 0; xi < 3; ++xi) {
            std::array<int, 2> yz{};
            int m = 0;
            for (int i = 0; i < 3; ++i)
                if (i != xi) yz[m++] = rest[i];
            out.push_back({rest[xi], yz[0], yz[1], indep[wi]});
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Case 1: omega(G) >= s

/// Two non-adjacent complement pairs from two distinct non-singleton components
/// of complement - P plus one vertex from each of s-4 further components; an
/// s-clique of G. For s in {2,3} the truncated set (one pair, or a pair and a
/// single vertex) is returned and left to verification.
inline Candidate construct_case1_pairs(const Graph& g, int s, int t, VertexSet p) {
    const detail::SplitContext ctx(g, s, t, p);
    constexpr std::string_view name = "case1_pairs";
    const auto big = detail::non_singleton_components(ctx);
    if (big.size() < 2)
        throw detail::guard_failed(name, "only " + std::to_string(big.size()) +
                                             " component(s) of complement-P contain a non-adjacent pair, need 2");

    const VertexSet pair_i = *detail::non_adjacent_pair(ctx.comp, ctx.comps[big[0]]);
    const VertexSet pair_j = *detail::non_adjacent_pair(ctx.comp, ctx.comps[big[1]]);

    Candidate cand;
    cand.trace.branch = Branch::Case1Sub1;
    cand.trace.named_sets["P"] = p;
    VertexSet padding;
    if (s >= 4) {
        const auto extra = detail::one_from_each(ctx.comps, {big[0], big[1]}, s - 4);
        if (!extra)
            throw detail::guard_failed(name, "need " + std::to_string(s - 4) + " further components, have " +
                                                 std::to_string(ctx.comps.size() - 2));
        padding = *extra;
        cand.trace.named_sets["pairs"] = pair_i | pair_j;
        cand.s_side = pair_i | pair_j | padding;
    } else if (s == 3) {
        padding = *detail::one_from_each(ctx.comps, {big[0]}, 1);
        cand.trace.named_sets["pairs"] = pair_i;
        cand.s_side = pair_i | padding;
        cand.trace.notes = "truncated construction for s=3: one pair plus one vertex; ";
    } else {
        cand.trace.named_sets["pairs"] = pair_i;
        cand.s_side = pair_i;
        cand.trace.notes = "truncated construction for s=2: one pair; ";
    }
    cand.trace.named_sets["S'"] = padding;
    cand.trace.notes += "H_i=" + to_string(ctx.comps[big[0]]) + " H_j=" + to_string(ctx.comps[big[1]]);
    return cand;
}

/// Exactly one non-singleton component H_i of complement - P, with |H_i| >= 9:
/// an independent 4-set of H_i (R(3,4) = 9) plus one vertex from each of s-4
/// other components.
inline Candidate construct_case1_ramsey(const Graph& g, int s, int t, VertexSet p) {
    const detail::SplitContext ctx(g, s, t, p);
    constexpr std::string_view name = "case1_ramsey";
    const auto big = detail::non_singleton_components(ctx);
    if (big.size() != 1)
        throw detail::guard_failed(name, std::to_string(big.size()) +
                                             " non-singleton components in complement-P, need exactly 1");
    const VertexSet hi = ctx.comps[big[0]];
    if (hi.size() < ramsey_r3(4))
        throw detail::guard_failed(name, "component " + to_string(hi) + " has " + std::to_string(hi.size()) +
                                             " vertices, need at least R(3,4)=9");

    const auto sub = induced(ctx.comp, hi);
    const VertexSet indep = sub.to_parent(find_independent_set(sub.graph, 4));

    Candidate cand;
    cand.trace.branch = Branch::Case1Sub2;
    cand.trace.named_sets["P"] = p;
    VertexSet padding;
    if (s >= 4) {
        const auto extra = detail::one_from_each(ctx.comps, {big[0]}, s - 4);
        if (!extra)
            throw detail::guard_failed(name, "need " + std::to_string(s - 4) + " further components, have " +
                                                 std::to_string(ctx.comps.size() - 1));
        padding = *extra;
        cand.trace.named_sets["pairs"] = indep;
        cand.s_side = indep | padding;
    } else {
        VertexSet head;
        for (int v : indep)
            if (head.size() < s) head.insert(v);
        cand.trace.named_sets["pairs"] = head;
        cand.s_side = head;
        cand.trace.notes = "truncated construction for s=" + std::to_string(s) + "; ";
    }
    cand.trace.named_sets["S'"] = padding;
    const auto members = indep.to_vector();
    cand.trace.notes += "H_i=" + to_string(hi) + " " +
                        detail::positional_note({{"x1", members[0]}, {"x2", members[1]}, {"x3", members[2]},
                                                 {"x4", members[3]}});
    return cand;
}

/// The first s vertices of a maximum clique of G. Both constructions above
/// presuppose chi(G - S0) <= t for every s-clique S0; when that fails, S0 is
/// the partition. Labelled with the subcase the component structure selects.
inline Candidate construct_case1_clique(const Graph& g, int s, int t, VertexSet p) {
    const detail::SplitContext ctx(g, s, t, p);
    const VertexSet clique = maximum_clique(g);
    if (clique.size() < s)
        throw detail::guard_failed("case1_clique", "omega = " + std::to_string(clique.size()) + " < s");
    VertexSet head;
    for (int v : clique)
        if (head.size() < s) head.insert(v);
    Candidate cand;
    cand.trace.branch = detail::non_singleton_components(ctx).size() >= 2 ? Branch::Case1Sub1 : Branch::Case1Sub2;
    cand.trace.named_sets["P"] = p;
    cand.trace.named_sets["singles"] = head;
    cand.trace.notes = "s-clique S0=" + to_string(head);
    cand.s_side = head;
    return cand;
}

// ---------------------------------------------------------------------------
// Case 2: omega(G) < s

namespace detail {

inline std::optional<Candidate> case2_preliminary(const SplitContext& ctx, std::vector<std::string>& failures) {
    const int half_p = (ctx.p.size() + 1) / 2;
    const int target = 2 * (ctx.s - half_p);
    if (target <= 0) {
        failures.push_back("case2_prelim: 2(s - ceil(|P|/2)) = " + std::to_string(target) + " <= 0");
        return std::nullopt;
    }
    VertexSet s_prime;
    const VertexSet pairs = add_pairs(ctx.comps, VertexSet{}, s_prime, target, 1);
    if (s_prime.size() != target) {
        failures.push_back("case2_prelim: only " + std::to_string(s_prime.size()) +
                           " vertices available in pairs, need " + std::to_string(target));
        return std::nullopt;
    }
    Candidate cand;
    cand.trace.branch = Branch::Case2Prelim;
    cand.trace.named_sets["P"] = ctx.p;
    cand.trace.named_sets["S'"] = s_prime;
    cand.trace.named_sets["pairs"] = pairs;
    cand.trace.notes = "|S|=" + std::to_string(s_prime.size() + ctx.p.size());
    cand.s_side = s_prime | ctx.p;
    return cand;
}

// |P| in {1,2}: F = N(x) u N(y) inside complement - P, parity patch from L0,
// then pairs avoiding X until |S'| = 2s-2.
inline std::optional<Candidate> case2_sub1(const SplitContext& ctx, std::size_t h0_index, const std::array<int, 4>& roles,
                                           std::vector<std::string>& failures) {
    const auto [x, y, z, w] = roles;
    const VertexSet h0 = ctx.comps[h0_index];
    const VertexSet inner = ctx.g.vertices() - ctx.p;
    const VertexSet f = (ctx.comp.neighbors(x) | ctx.comp.neighbors(y)) & inner;
    const VertexSet xyz{x, y, z};
    VertexSet reps;
    for (std::size_t i = 0; i < ctx.comps.size(); ++i)
        if (i != h0_index) reps.insert(ctx.comps[i].front());
    const VertexSet big_x = reps | xyz;
    const int target = 2 * ctx.s - 2;
    const std::string tag = "case2_sub1[" + positional_note({{"x", x}, {"y", y}, {"z", z}}) + "]";

    VertexSet s_prime = f;
    int patch = -1;
    VertexSet l0;
    if (f.size() % 2 == 1) {
        l0 = h0 - f - xyz;
        if (l0.empty()) {
            failures.push_back(tag + ": |F| odd and L0 empty");
            return std::nullopt;
        }
        patch = l0.front();
        s_prime.insert(patch);
    }
    if (s_prime.size() > target) {
        failures.push_back(tag + ": |F| + patch = " + std::to_string(s_prime.size()) + " exceeds 2s-2 = " +
                           std::to_string(target));
        return std::nullopt;
    }
    const VertexSet pairs = add_pairs(ctx.comps, big_x, s_prime, target, 0);
    if (s_prime.size() != target) {
        failures.push_back(tag + ": ran out of pairs at |S'|=" + std::to_string(s_prime.size()));
        return std::nullopt;
    }
    Candidate cand;
    cand.trace.branch = Branch::Case2Sub1;
    cand.trace.named_sets["P"] = ctx.p;
    cand.trace.named_sets["S'"] = s_prime;
    cand.trace.named_sets["F"] = f;
    cand.trace.named_sets["H0"] = h0;
    cand.trace.named_sets["X"] = big_x;
    if (patch >= 0) cand.trace.named_sets["L0"] = l0;
    cand.trace.named_sets["pairs"] = pairs;
    cand.trace.named_sets["singles"] = VertexSet{x, y};
    cand.trace.notes = positional_note({{"x", x}, {"y", y}, {"z", z}, {"w_indep", w}, {"w_patch", patch}});
    cand.s_side = s_prime | ctx.p;
    return cand;
}

// |P| = 0, contradiction set: F' = N(x) u N(y) u N(z), patch to odd size from
// L0, pairs avoiding X until |S| = 2s-1.
inline std::optional<Candidate> case2_sub2_contra(const SplitContext& ctx, std::size_t h0_index,
                                                  const std::array<int, 4>& roles, std::vector<std::string>& failures) {
    const auto [x, y, z, w] = roles;
    const VertexSet h0 = ctx.comps[h0_index];
    const VertexSet f_prime = ctx.comp.neighbors(x) | ctx.comp.neighbors(y) | ctx.comp.neighbors(z);
    const VertexSet xyz{x, y, z};
    VertexSet reps;
    for (std::size_t i = 0; i < ctx.comps.size(); ++i)
        if (i != h0_index) reps.insert(ctx.comps[i].front());
    const VertexSet big_x = reps | xyz;
    const int target = 2 * ctx.s - 1;
    const std::string tag = "case2_sub2_contra[" + positional_note({{"x", x}, {"y", y}, {"z", z}}) + "]";

    VertexSet s_set = f_prime;
    int patch = -1;
    const VertexSet l0 = h0 - f_prime - xyz;
    if (f_prime.size() % 2 == 0) {
        if (l0.empty()) {
            failures.push_back(tag + ": |F'| even and L0 empty");
            return std::nullopt;
        }
        patch = l0.front();
        s_set.insert(patch);
    }
    if (s_set.size() > target) {
        failures.push_back(tag + ": |F'| + patch = " + std::to_string(s_set.size()) + " exceeds 2s-1 = " +
                           std::to_string(target));
        return std::nullopt;
    }
    const VertexSet pairs = add_pairs(ctx.comps, big_x, s_set, target, 0);
    if (s_set.size() != target) {
        failures.push_back(tag + ": ran out of pairs at |S|=" + std::to_string(s_set.size()));
        return std::nullopt;
    }
    Candidate cand;
    cand.trace.branch = Branch::Case2Sub2Contra;
    cand.trace.named_sets["P"] = ctx.p;
    cand.trace.named_sets["F'"] = f_prime;
    cand.trace.named_sets["H0"] = h0;
    cand.trace.named_sets["X"] = big_x;
    cand.trace.named_sets["L0"] = l0;
    cand.trace.named_sets["pairs"] = pairs;
    cand.trace.named_sets["singles"] = xyz;
    cand.trace.notes = positional_note({{"x", x}, {"y", y}, {"z", z}, {"w_indep", w}, {"w_patch", patch}});
    cand.s_side = s_set;
    return cand;
}

// |P| = 0, main construction: u1, u2 in N(x) outside N(y) u N(z);
// Y = {x} u N(x) u N(u1) u N(u2) u U2; S = N(x) u S' with |S| = 2s-3.
inline std::optional<Candidate> case2_sub2_main(const SplitContext& ctx, std::size_t h0_index,
                                                const std::array<int, 4>& roles, std::vector<std::string>& failures) {
    const auto [x, y, z, w] = roles;
    const VertexSet h0 = ctx.comps[h0_index];
    const VertexSet nx = ctx.comp.neighbors(x);
    const std::string tag = "case2_sub2_main[" + positional_note({{"x", x}, {"y", y}, {"z", z}}) + "]";
    const VertexSet private_x = nx - ctx.comp.neighbors(y) - ctx.comp.neighbors(z);
    if (private_x.size() < 2) {
        failures.push_back(tag + ": fewer than two vertices of N(x) outside N(y) u N(z)");
        return std::nullopt;
    }
    const int u1 = private_x.front();
    const int u2 = (private_x - VertexSet::single(u1)).front();

    const VertexSet big_u1 = VertexSet::single(x) | nx | ctx.comp.neighbors(u1) | ctx.comp.neighbors(u2);
    VertexSet big_u2;
    for (std::size_t i = 0; i < ctx.comps.size(); ++i)
        if (i != h0_index) big_u2.insert(ctx.comps[i].front());
    const VertexSet big_y = big_u1 | big_u2;
    const int target = 2 * ctx.s - 3 - nx.size();
    if (target < 0) {
        failures.push_back(tag + ": |N(x)| = " + std::to_string(nx.size()) + " exceeds 2s-3");
        return std::nullopt;
    }

    VertexSet s_prime;
    int patch = -1;
    const VertexSet l0 = h0 - big_y;
    if (nx.size() % 2 == 0) {
        if (l0.empty()) {
            failures.push_back(tag + ": |N(x)| even and L0 empty");
            return std::nullopt;
        }
        patch = l0.front();
        s_prime.insert(patch);
    }
    if (s_prime.size() > target) {
        failures.push_back(tag + ": parity patch does not fit in |S'| = " + std::to_string(target));
        return std::nullopt;
    }
    const VertexSet pairs = add_pairs(ctx.comps, big_y, s_prime, target, 0);
    if (s_prime.size() != target) {
        failures.push_back(tag + ": ran out of pairs at |S'|=" + std::to_string(s_prime.size()));
        return std::nullopt;
    }
    Candidate cand;
    cand.trace.branch = Branch::Case2Sub2Main;
    cand.trace.named_sets["P"] = ctx.p;
    cand.trace.named_sets["S'"] = s_prime;
    cand.trace.named_sets["H0"] = h0;
    cand.trace.named_sets["U1"] = big_u1;
    cand.trace.named_sets["U2"] = big_u2;
    cand.trace.named_sets["Y"] = big_y;
    cand.trace.named_sets["L0"] = l0;
    cand.trace.named_sets["pairs"] = pairs;
    cand.trace.named_sets["singles"] = VertexSet::single(x);
    cand.trace.notes = positional_note(
        {{"x", x}, {"y", y}, {"z", z}, {"w_indep", w}, {"u1", u1}, {"u2", u2}, {"y_patch", patch}});
    cand.s_side = s_prime | nx;
    return cand;
}

} // namespace detail

/// Case-2 candidates in cascade order: the preliminary even-intersection set,
/// then (|P| in {1,2}) the F-based set, or (|P| = 0) the F'-based set followed
/// by the U1/U2 construction. Later role assignments of the independent 4-set
/// follow the ascending one. Guards that fail are reported, not thrown.
inline CandidateList construct_case2(const Graph& g, int s, int t, VertexSet p) {
    const detail::SplitContext ctx(g, s, t, p);
    CandidateList out;
    if (auto c = detail::case2_preliminary(ctx, out.guard_failures)) out.candidates.push_back(std::move(*c));

    if (p.size() > 2) return out;
    const auto h0 = detail::find_h0(ctx);
    if (!h0) {
        out.guard_failures.push_back("case2: no component of complement-P has an independent 4-set");
        return out;
    }
    for (const auto& roles : detail::role_assignments(h0->second)) {
        if (p.size() >= 1) {
            if (auto c = detail::case2_sub1(ctx, h0->first, roles, out.guard_failures))
                out.candidates.push_back(std::move(*c));
        } else {
            if (auto c = detail::case2_sub2_contra(ctx, h0->first, roles, out.guard_failures))
                out.candidates.push_back(std::move(*c));
            if (auto c = detail::case2_sub2_main(ctx, h0->first, roles, out.guard_failures))
                out.candidates.push_back(std::move(*c));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

/// Some partition with chi(G[S]) >= a and chi(G[T]) >= b, or nothing. Subsets
/// are scanned in increasing bitmask order; when a == b only S containing
/// vertex 0 is considered.
inline std::optional<std::pair<VertexSet, VertexSet>> splittable_bruteforce(const Graph& g, int a, int b,
                                                                            int limit = kFallbackLimit) {
    detail::require_alpha2(g, "splittable_bruteforce");
    if (g.order() > limit)
        throw Error(ErrorCode::TooLarge, "splittable_bruteforce: order " + std::to_string(g.order()) +
                                             " exceeds limit " + std::to_string(limit));
    const int n = g.order();
    if (n < 2) return std::nullopt;
    const Graph comp = complement(g);
    const VertexSet all = g.vertices();
    const std::uint64_t full = all.bits();
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        if (a == b && !(mask & 1U)) continue;
        const VertexSet s_side(mask);
        const VertexSet t_side = all - s_side;
        if (s_side.size() < a || t_side.size() < b) continue;
        if (chi_alpha2_value_within(comp, s_side) < a) continue;
        if (chi_alpha2_value_within(comp, t_side) < b) continue;
        return std::pair{s_side, t_side};
    }
    return std::nullopt;
}

namespace detail {

// Every subset S by increasing size from s upward, lexicographic within a size.
inline std::optional<VertexSet> fallback_search(const Graph& g, const Graph& comp, int s, int t) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    for (int k = s; k <= n - (t + 1); ++k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            const VertexSet s_side(mask);
            if (chi_alpha2_value_within(comp, s_side) >= s && chi_alpha2_value_within(comp, all - s_side) >= t + 1)
                return s_side;
            const std::uint64_t low = mask & (~mask + 1);
            const std::uint64_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Verification

struct VerificationResult {
    bool ok = true;
    std::vector<std::string> violations;
    int s_chi = -1;
    int t_chi = -1;

    void fail(std::string why) {
        ok = false;
        violations.push_back(std::move(why));
    }
};

namespace detail {

// Partition, per-side chromatic bounds, recorded values and trace roles.
inline VerificationResult verify_sides(const Graph& g, int s, int t, VertexSet s_side, VertexSet t_side,
                                       int recorded_s_chi, int recorded_t_chi, const CaseTrace& trace) {
    VerificationResult res;
    const VertexSet all = g.vertices();
    if (!s_side.subset_of(all) || !t_side.subset_of(all)) res.fail("sides contain labels outside the graph");
    if (s_side.intersects(t_side)) res.fail("s_side and t_side overlap");
    if ((s_side | t_side) != all) res.fail("s_side and t_side do not cover every vertex");
    if (!alpha_at_most_two(g)) res.fail("graph has independence number above 2");
    for (const auto& [role, set] : trace.named_sets) {
        if (!set.subset_of(all)) res.fail("named set " + role + " leaves the vertex set");
        if (!role_allowed(trace.branch, role))
            res.fail("role " + role + " not allowed in branch " + std::string(to_string(trace.branch)));
    }
    if (!res.ok) return res;

    const Graph comp = complement(g);
    res.s_chi = chi_alpha2_value_within(comp, s_side);
    res.t_chi = chi_alpha2_value_within(comp, t_side);
    if (res.s_chi < s) res.fail("s_chi = " + std::to_string(res.s_chi) + " below s = " + std::to_string(s));
    if (res.t_chi < t + 1)
        res.fail("t_chi = " + std::to_string(res.t_chi) + " below t+1 = " + std::to_string(t + 1));
    if (recorded_s_chi != res.s_chi)
        res.fail("recorded s_chi = " + std::to_string(recorded_s_chi) + " but recomputed " + std::to_string(res.s_chi));
    if (recorded_t_chi != res.t_chi)
        res.fail("recorded t_chi = " + std::to_string(recorded_t_chi) + " but recomputed " + std::to_string(res.t_chi));
    return res;
}

} // namespace detail

/// Recomputes everything in the certificate from g, including that each
/// side's witness P reproduces its chi through the lower-bound formula.
inline VerificationResult verify_certificate(const Graph& g, int s, int t, const SplitCertificate& cert) {
    VerificationResult res = detail::verify_sides(g, s, t, cert.s_side, cert.t_side, cert.s_evidence.chi,
                                                  cert.t_evidence.chi, cert.trace);
    if (!res.ok) return res;
    for (auto [side, evidence, name] : {std::tuple{cert.s_side, &cert.s_evidence, "s"},
                                        std::tuple{cert.t_side, &cert.t_evidence, "t"}}) {
        if (!evidence->witness.p.subset_of(side)) {
            res.fail(std::string(name) + "-side witness is not inside the side");
            continue;
        }
        const auto sub = induced(g, side);
        VertexSet local;
        for (int i = 0; i < static_cast<int>(sub.labels.size()); ++i)
            if (evidence->witness.p.contains(sub.labels[i])) local.insert(i);
        if (chi_lower_bound(sub.graph, local) != evidence->chi)
            res.fail(std::string(name) + "-side witness does not certify chi = " + std::to_string(evidence->chi));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Cascade

namespace detail {

inline std::string candidate_outcome(const Graph& comp, int s, int t, VertexSet s_side, bool& accepted) {
    const VertexSet all = comp.vertices();
    accepted = false;
    if (s_side.empty() || s_side == all) return "rejected: one side is empty";
    const int s_chi = chi_alpha2_value_within(comp, s_side);
    const int t_chi = chi_alpha2_value_within(comp, all - s_side);
    accepted = s_chi >= s && t_chi >= t + 1;
    return (accepted ? "accepted" : "rejected") + std::string(": chi(G[S])=") + std::to_string(s_chi) +
           " chi(G[T])=" + std::to_string(t_chi);
}

inline SplitCertificate make_certificate(const Graph& g, VertexSet s_side, CaseTrace trace) {
    SplitCertificate cert;
    cert.s_side = s_side;
    cert.t_side = g.vertices() - s_side;
    cert.s_evidence = chi_alpha2_within(g, cert.s_side);
    cert.t_evidence = chi_alpha2_within(g, cert.t_side);
    cert.trace = std::move(trace);
    return cert;
}

inline std::string counterexample_record(const SplitRequest& req, const HypothesisReport& rep,
                                         const std::vector<Attempt>& attempts) {
    nlohmann::ordered_json j;
    j["kind"] = "POTENTIAL_COUNTEREXAMPLE";
    j["graph"] = serialize_graph6(req.g);
    j["s"] = req.s;
    j["t"] = req.t;
    j["alpha"] = rep.alpha;
    j["omega"] = rep.omega;
    j["chi"] = rep.chi;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : attempts) {
        nlohmann::ordered_json item;
        item["branch"] = std::string(to_string(a.branch));
        item["outcome"] = a.outcome;
        if (a.candidate) {
            item["s_side"] = to_json(a.candidate->s_side);
            item["trace"] = trace_json(a.candidate->trace);
        }
        arr.push_back(std::move(item));
    }
    j["attempts"] = std::move(arr);
    return j.dump();
}

} // namespace detail

/// Runs the cascade and returns a verified certificate; `attempts`, when given,
/// receives the log of every construction tried.
inline SplitCertificate split(const SplitRequest& req, const SplitOptions& options = {},
                              std::vector<Attempt>* attempts = nullptr) {
    const HypothesisReport rep = check_hypotheses(req);
    if (!rep.holds) {
        std::string why;
        for (const auto& r : rep.reasons) why += (why.empty() ? "" : "; ") + r;
        throw Error(ErrorCode::HypothesisViolation, why);
    }
    const Graph& g = req.g;
    const int s = req.s;
    const int t = req.t;
    const Graph comp = complement(g);
    const WitnessSet witness = maximal_witness_set(comp);

    std::vector<Attempt> local_log;
    std::vector<Attempt>& log = attempts ? *attempts : local_log;
    auto try_candidate = [&](Candidate cand) -> std::optional<SplitCertificate> {
        bool accepted = false;
        std::string outcome = detail::candidate_outcome(comp, s, t, cand.s_side, accepted);
        log.push_back({cand.trace.branch, outcome, cand});
        if (!accepted) return std::nullopt;
        return detail::make_certificate(g, cand.s_side, std::move(cand.trace));
    };

    if (rep.omega >= s) {
        for (auto [construct, branch] : {std::pair{&construct_case1_pairs, Branch::Case1Sub1},
                                         std::pair{&construct_case1_ramsey, Branch::Case1Sub2},
                                         std::pair{&construct_case1_clique, Branch::Case1Sub1}}) {
            try {
                if (auto cert = try_candidate(construct(g, s, t, witness.p))) return *cert;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::GuardFailed) throw;
                log.push_back({branch, e.what(), std::nullopt});
            }
        }
    } else {
        CandidateList list = construct_case2(g, s, t, witness.p);
        for (const auto& why : list.guard_failures) log.push_back({Branch::Case2Prelim, "GuardFailed: " + why, std::nullopt});
        for (auto& cand : list.candidates)
            if (auto cert = try_candidate(std::move(cand))) return *cert;
        log.push_back({Branch::Fallback,
                       std::string(to_string(ErrorCode::ConstructionExhausted)) + ": every case-2 candidate failed",
                       std::nullopt});
    }

    if (g.order() > options.fallback_limit)
        throw Error(ErrorCode::TooLarge, "constructions failed and order " + std::to_string(g.order()) +
                                             " exceeds fallback limit " + std::to_string(options.fallback_limit));
    if (auto s_side = detail::fallback_search(g, comp, s, t)) {
        CaseTrace trace;
        trace.branch = Branch::Fallback;
        trace.named_sets["P"] = witness.p;
        trace.notes = "exhaustive search after " + std::to_string(log.size()) + " rejected construction(s)";
        log.push_back({Branch::Fallback, "accepted", Candidate{*s_side, trace}});
        return detail::make_certificate(g, *s_side, std::move(trace));
    }
    log.push_back({Branch::Fallback, "no partition exists", std::nullopt});
    std::string record = detail::counterexample_record(req, rep, log);
    if (!options.report_path.empty()) {
        std::ofstream out(options.report_path);
        out << record << '\n';
    }
    throw CounterexampleError("no (" + std::to_string(s) + "," + std::to_string(t + 1) + ") partition of " +
                                  serialize_graph6(g),
                              std::move(record));
}

// ---------------------------------------------------------------------------
// Certificate documents

inline nlohmann::ordered_json certificate_json(const Graph& g, int s, int t, const SplitCertificate& cert,
                                               bool verified) {
    nlohmann::ordered_json j;
    j["graph"] = serialize_graph6(g);
    j["s"] = s;
    j["t"] = t;
    j["s_side"] = to_json(cert.s_side);
    j["t_side"] = to_json(cert.t_side);
    j["s_chi"] = cert.s_evidence.chi;
    j["t_chi"] = cert.t_evidence.chi;
    j["branch"] = std::string(to_string(cert.trace.branch));
    j["named_sets"] = named_sets_json(cert.trace);
    j["verified"] = verified;
    j["notes"] = cert.trace.notes;
    return j;
}

struct CertificateDocument {
    Graph g;
    int s = 0;
    int t = 0;
    SplitCertificate cert;
    bool verified = false;
};

inline CertificateDocument parse_certificate(std::string_view text, int max_order = kMaxVertices) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, std::string("certificate is not JSON: ") + e.what());
    }
    for (const char* key : {"graph", "s", "t", "s_side", "t_side", "s_chi", "t_chi", "branch", "named_sets", "verified"})
        if (!j.contains(key)) throw Error(ErrorCode::MalformedInput, std::string("certificate lacks field ") + key);
    try {
        CertificateDocument doc;
        doc.g = parse_graph6(j["graph"].get<std::string>(), max_order);
        doc.s = j["s"].get<int>();
        doc.t = j["t"].get<int>();
        const int n = doc.g.order();
        doc.cert.s_side = vertex_set_from_json(j["s_side"], n);
        doc.cert.t_side = vertex_set_from_json(j["t_side"], n);
        doc.cert.s_evidence.chi = j["s_chi"].get<int>();
        doc.cert.t_evidence.chi = j["t_chi"].get<int>();
        doc.cert.trace.branch = branch_from_string(j["branch"].get<std::string>());
        for (const auto& [role, members] : j["named_sets"].items())
            doc.cert.trace.named_sets[role] = vertex_set_from_json(members, n);
        if (j.contains("notes")) doc.cert.trace.notes = j["notes"].get<std::string>();
        doc.verified = j["verified"].get<bool>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedInput, std::string("certificate field has the wrong type: ") + e.what());
    }
}

/// Checks a certificate document against its embedded graph. Documents do
/// not carry the evidence witnesses, so only the chi values are compared.
inline VerificationResult check_certificate(const CertificateDocument& doc) {
    return detail::verify_sides(doc.g, doc.s, doc.t, doc.cert.s_side, doc.cert.t_side, doc.cert.s_evidence.chi,
                                doc.cert.t_evidence.chi, doc.cert.trace);
}

} // namespace tihany

#endif // TIHANY_SPLITTER_HPP
