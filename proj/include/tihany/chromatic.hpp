#ifndef TIHANY_CHROMATIC_HPP
#define TIHANY_CHROMATIC_HPP

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "clique.hpp"
#include "matching.hpp"

namespace tihany {

/// chi together with the complement witness P that certifies it:
/// chi = (n + o(complement - P) - |P|) / 2.
struct ChiCertificate {
    int chi = 0;
    WitnessSet witness;
    /// Colour classes of size <= 2; filled in by materialize_coloring().
    std::optional<std::vector<VertexSet>> coloring;
};

inline constexpr int kBruteforceChiLimit = 14;

inline bool alpha_at_most_two(const Graph& g) { return is_triangle_free(complement(g)); }

namespace detail {

inline void require_alpha2(const Graph& g, const char* what) {
    if (!alpha_at_most_two(g))
        throw Error(ErrorCode::AlphaTooLarge, std::string(what) + ": graph has an independent set of size 3");
}

} // namespace detail

/// chi(G) = n - nu(complement) when alpha(G) <= 2.
inline ChiCertificate chi_alpha2(const Graph& g) {
    detail::require_alpha2(g, "chi_alpha2");
    const Graph comp = complement(g);
    ChiCertificate cert;
    cert.chi = g.order() - matching_number_within(comp, comp.vertices());
    cert.witness = maximal_witness_set(comp);
    return cert;
}

/// chi_alpha2 of g[s] with the witness expressed in g's labels.
inline ChiCertificate chi_alpha2_within(const Graph& g, VertexSet s) {
    const auto sub = induced(g, s);
    ChiCertificate cert = chi_alpha2(sub.graph);
    cert.witness.p = sub.to_parent(cert.witness.p);
    return cert;
}

/// chi(g[s]) for alpha(g) <= 2 without building certificates. Caller guarantees the precondition.
inline int chi_alpha2_value_within(const Graph& complement_graph, VertexSet s) {
    return s.size() - matching_number_within(complement_graph, s);
}

/// Fills cert.coloring with one class per matched complement edge and one per
/// unmatched vertex. Labels follow g.
inline const std::vector<VertexSet>& materialize_coloring(const Graph& g, ChiCertificate& cert) {
    if (!cert.coloring) {
        const Graph comp = complement(g);
        const Matching m = maximum_matching(comp);
        std::vector<VertexSet> classes;
        VertexSet covered;
        for (auto [u, v] : m.edges) {
            classes.push_back(VertexSet{u, v});
            covered |= VertexSet{u, v};
        }
        for (int v : g.vertices() - covered) classes.push_back(VertexSet::single(v));
        cert.coloring = std::move(classes);
    }
    return *cert.coloring;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<VertexSet>& classes) {
    VertexSet seen;
    for (VertexSet c : classes) {
        if (c.intersects(seen) || !is_independent(g, c)) return false;
        seen |= c;
    }
    return seen == g.vertices();
}

/// (n + o(complement - p) - |p|) / 2, a lower bound on chi for any p.
inline int chi_lower_bound(const Graph& g, VertexSet p) {
    detail::require_alpha2(g, "chi_lower_bound");
    if (!p.subset_of(g.vertices()))
        throw Error(ErrorCode::OutOfRange, "witness set " + to_string(p) + " not inside the graph");
    const int odd = odd_components_within(complement(g), g.vertices() - p);
    return (g.order() + odd - p.size()) / 2;
}

namespace detail {

// Exact colouring by branch and bound, branching on the vertex of maximum
// saturation (ties: most uncoloured neighbours, then lowest label).
class DsaturSearch {
public:
    explicit DsaturSearch(const Graph& g) : g_(g) {}

    int run() {
        const int n = g_.order();
        if (n == 0) return 0;
        lower_ = clique_number(g_);
        best_ = n;
        colour_.fill(-1);
        forbidden_.fill(0);
        search(0, 0);
        return best_;
    }

private:
    void search(int coloured, int used) {
        if (used >= best_) return;
        if (coloured == g_.order()) {
            best_ = used;
            return;
        }
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] != -1) continue;
            const int sat = std::popcount(forbidden_[v]);
            int deg = 0;
            for (int u : g_.neighbors(v)) deg += colour_[u] == -1;
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        for (int c = 0; c <= used; ++c) {
            if ((forbidden_[pick] >> c) & 1U) continue;
            std::array<std::uint64_t, kMaxVertices> saved = forbidden_;
            colour_[pick] = c;
            for (int u : g_.neighbors(pick)) forbidden_[u] |= std::uint64_t{1} << c;
            search(coloured + 1, c == used ? used + 1 : used);
            colour_[pick] = -1;
            forbidden_ = saved;
            if (best_ == lower_) return;
        }
    }

    const Graph& g_;
    int lower_ = 0;
    int best_ = 0;
    std::array<int, kMaxVertices> colour_{};
    std::array<std::uint64_t, kMaxVertices> forbidden_{};
};

} // namespace detail

/// Exact chromatic number for any graph up to `limit` vertices.
inline int chi_bruteforce(const Graph& g, int limit = kBruteforceChiLimit) {
    detail::check_limit(g, limit, "chi_bruteforce");
    return detail::DsaturSearch(g).run();
}

} // namespace tihany

#endif // TIHANY_CHROMATIC_HPP
