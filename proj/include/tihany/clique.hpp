#ifndef TIHANY_CLIQUE_HPP
#define TIHANY_CLIQUE_HPP

#include <array>
#include <optional>
#include <string>

#include "graph.hpp"

namespace tihany {

namespace detail {

// Branch and bound for maximum cliques; candidates are greedily coloured and
// visited from the highest colour down, so the colour number bounds the
// remaining gain.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

    VertexSet run(VertexSet candidates) {
        expand(VertexSet{}, candidates);
        return best_;
    }

private:
    void expand(VertexSet current, VertexSet candidates) {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> colour{};
        int count = 0;
        VertexSet uncoloured = candidates;
        for (int c = 1; !uncoloured.empty(); ++c) {
            VertexSet open = uncoloured;
            while (!open.empty()) {
                const int v = open.front();
                open -= g_.neighbors(v);
                open.erase(v);
                uncoloured.erase(v);
                order[count] = v;
                colour[count] = c;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (current.size() + colour[i] <= best_.size() || best_.size() >= stop_at_) return;
            const int v = order[i];
            VertexSet next = current;
            next.insert(v);
            const VertexSet narrowed = candidates & g_.neighbors(v);
            if (narrowed.empty()) {
                if (next.size() > best_.size()) best_ = next;
            } else {
                expand(next, narrowed);
            }
            candidates.erase(v);
        }
    }

    const Graph& g_;
    int stop_at_;
    VertexSet best_;
};

inline void check_limit(const Graph& g, int limit, const char* what) {
    if (g.order() > limit)
        throw Error(ErrorCode::TooLarge, std::string(what) + ": order " + std::to_string(g.order()) +
                                             " exceeds exact-solver limit " + std::to_string(limit));
}

} // namespace detail

inline constexpr int kExactSolverLimit = 64;

/// A maximum clique of g[within].
inline VertexSet maximum_clique(const Graph& g, VertexSet within, int limit = kExactSolverLimit) {
    detail::check_limit(g, limit, "maximum_clique");
    return detail::CliqueSearch(g, kMaxVertices + 1).run(within & g.vertices());
}

inline VertexSet maximum_clique(const Graph& g, int limit = kExactSolverLimit) {
    return maximum_clique(g, g.vertices(), limit);
}

inline int clique_number(const Graph& g, int limit = kExactSolverLimit) { return maximum_clique(g, limit).size(); }

inline int independence_number(const Graph& g, int limit = kExactSolverLimit) {
    detail::check_limit(g, limit, "independence_number");
    return clique_number(complement(g), limit);
}

/// True iff g[within] contains a clique of size k; stops at the first one found.
inline bool has_clique(const Graph& g, int k, VertexSet within) {
    return detail::CliqueSearch(g, k).run(within & g.vertices()).size() >= k;
}

/// R(3,k) for the three values the splitting argument relies on.
constexpr int ramsey_r3(int k) {
    switch (k) {
    case 2: return 3;
    case 3: return 6;
    case 4: return 9;
    default: return -1;
    }
}

struct IndependentSetSearch {
    std::optional<VertexSet> set;
    /// n(g) >= R(3,k), so a set is guaranteed to exist.
    bool guaranteed = false;
};

/// Looks for an independent set of exactly k vertices in a triangle-free graph.
/// A vertex of degree >= k supplies one directly (its neighbourhood is independent);
/// otherwise the lexicographically first k-set is found by backtracking.
inline IndependentSetSearch search_independent_set(const Graph& g, int k) {
    if (k < 1 || k > kMaxVertices) throw Error(ErrorCode::BadParameters, "independent set size " + std::to_string(k));
    if (!is_triangle_free(g)) throw Error(ErrorCode::NotTriangleFree, "find_independent_set needs a triangle-free graph");

    IndependentSetSearch result;
    const int bound = ramsey_r3(k);
    result.guaranteed = bound > 0 && g.order() >= bound;

    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= k) {
            VertexSet pick;
            for (int u : g.neighbors(v)) {
                if (pick.size() == k) break;
                pick.insert(u);
            }
            result.set = pick;
            return result;
        }
    }

    VertexSet chosen;
    auto extend = [&](auto&& self, VertexSet open) -> bool {
        if (chosen.size() == k) return true;
        while (open.size() + chosen.size() >= k) {
            const int v = open.front();
            open.erase(v);
            chosen.insert(v);
            if (self(self, open - g.neighbors(v))) return true;
            chosen.erase(v);
        }
        return false;
    };
    if (extend(extend, g.vertices())) result.set = chosen;
    return result;
}

/// Throws NotFound when no k-set exists; the message records when n(g) < R(3,k),
/// i.e. when the size guarantee did not apply in the first place.
inline VertexSet find_independent_set(const Graph& g, int k) {
    if (ramsey_r3(k) < 0)
        throw Error(ErrorCode::BadParameters, "k must be 2, 3 or 4, got " + std::to_string(k));
    auto found = search_independent_set(g, k);
    if (found.set) return *found.set;
    std::string why = "no independent set of size " + std::to_string(k);
    if (!found.guaranteed)
        why += " (InsufficientSize: n=" + std::to_string(g.order()) + " < R(3," + std::to_string(k) +
               ")=" + std::to_string(ramsey_r3(k)) + ")";
    throw Error(ErrorCode::NotFound, why);
}

} // namespace tihany

#endif // TIHANY_CLIQUE_HPP
