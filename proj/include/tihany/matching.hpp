#ifndef TIHANY_MATCHING_HPP
#define TIHANY_MATCHING_HPP

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace tihany {

struct Matching {
    std::vector<std::pair<int, int>> edges; ///< (u,v) with u<v, lexicographic
    int nu = 0;
};

/// P together with o(g-P) and o(g-P) - |P|.
struct WitnessSet {
    VertexSet p;
    int odd_components = 0;
    int value = 0;
};

struct GallaiEdmonds {
    VertexSet d; ///< missed by some maximum matching
    VertexSet a; ///< neighbours of d outside d
    VertexSet c; ///< everything else
};

namespace detail {

// Edmonds' blossom algorithm, O(n^3). Blossoms are contracted by relabelling
// their vertices with the blossom base; augmenting paths are traced back
// through `parent_` and `mate_`. Only vertices in `alive` take part.
class BlossomMatcher {
public:
    BlossomMatcher(const Graph& g, VertexSet alive) : g_(g), alive_(alive & g.vertices()) {
        mate_.fill(-1);
    }

    const std::array<int, kMaxVertices>& run() {
        for (int v : alive_) {
            if (mate_[v] != -1) continue;
            for (int u : g_.neighbors(v) & alive_) {
                if (mate_[u] == -1) {
                    mate_[u] = v;
                    mate_[v] = u;
                    break;
                }
            }
        }
        for (int root : alive_) {
            if (mate_[root] != -1) continue;
            int v = find_augmenting_path(root);
            while (v != -1) {
                const int pv = parent_[v];
                const int next = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = next;
            }
        }
        return mate_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::array<bool, kMaxVertices> seen{};
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::array<bool, kMaxVertices> used{};
        parent_.fill(-1);
        for (int i = 0; i < kMaxVertices; ++i) base_[i] = i;
        std::array<int, kMaxVertices> queue{};
        int head = 0;
        int tail = 0;
        used[root] = true;
        queue[tail++] = root;
        while (head < tail) {
            const int v = queue[head++];
            for (int to : g_.neighbors(v) & alive_) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    const int cur = lowest_common_base(v, to);
                    in_blossom_.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i : alive_) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                queue[tail++] = i;
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used[mate_[to]] = true;
                    queue[tail++] = mate_[to];
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    VertexSet alive_;
    std::array<int, kMaxVertices> mate_{};
    std::array<int, kMaxVertices> parent_{};
    std::array<int, kMaxVertices> base_{};
    std::array<bool, kMaxVertices> in_blossom_{};
};

} // namespace detail

/// Maximum matching of g[alive]; edges in parent labels.
inline Matching maximum_matching_within(const Graph& g, VertexSet alive) {
    detail::BlossomMatcher matcher(g, alive);
    const auto& mate = matcher.run();
    Matching m;
    for (int v : alive & g.vertices())
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    m.nu = static_cast<int>(m.edges.size());
    return m;
}

inline Matching maximum_matching(const Graph& g) { return maximum_matching_within(g, g.vertices()); }

/// nu(g[alive]).
inline int matching_number_within(const Graph& g, VertexSet alive) {
    detail::BlossomMatcher matcher(g, alive);
    const auto& mate = matcher.run();
    int matched = 0;
    for (int v : alive & g.vertices()) matched += mate[v] != -1;
    return matched / 2;
}

/// n - 2 nu(g), which by Tutte-Berge equals max_P (o(g-P) - |P|).
inline int tutte_berge_deficiency(const Graph& g) {
    return g.order() - 2 * matching_number_within(g, g.vertices());
}

inline bool is_matching_of(const Graph& g, const Matching& m) {
    VertexSet covered;
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
        if (covered.contains(u) || covered.contains(v)) return false;
        covered.insert(u);
        covered.insert(v);
    }
    return m.nu == static_cast<int>(m.edges.size());
}

inline WitnessSet evaluate_witness(const Graph& g, VertexSet p) {
    WitnessSet w;
    w.p = p;
    w.odd_components = odd_components_within(g, g.vertices() - p);
    w.value = w.odd_components - p.size();
    return w;
}

/// D is computed from n extra matchings on vertex-deleted graphs rather than
/// from blossom internals.
inline GallaiEdmonds gallai_edmonds(const Graph& g) {
    const VertexSet all = g.vertices();
    const int nu = matching_number_within(g, all);
    GallaiEdmonds ge;
    for (int v : all)
        if (matching_number_within(g, all - VertexSet::single(v)) == nu) ge.d.insert(v);
    for (int v : ge.d) ge.a |= g.neighbors(v);
    ge.a -= ge.d;
    ge.c = all - ge.d - ge.a;
    return ge;
}

/// A deficiency-maximising P with every component of g-P odd: starts from the
/// Gallai-Edmonds set A and moves the lowest vertex of the lowest even
/// component into P until no even component is left.
inline WitnessSet maximal_witness_set(const Graph& g) {
    VertexSet p = gallai_edmonds(g).a;
    for (int guard = 0; guard <= g.order(); ++guard) {
        const auto comps = components_within(g, g.vertices() - p);
        auto even = std::find_if(comps.begin(), comps.end(), [](VertexSet c) { return c.size() % 2 == 0; });
        if (even == comps.end()) break;
        p.insert(even->front());
    }
    return evaluate_witness(g, p);
}

} // namespace tihany

#endif // TIHANY_MATCHING_HPP
