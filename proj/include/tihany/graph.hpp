#ifndef TIHANY_GRAPH_HPP
#define TIHANY_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace tihany {

/// Hard upper bound on the number of vertices; adjacency rows are 64-bit words.
inline constexpr int kMaxVertices = 64;

/// A subset of {0..63} stored as a bitmask. Iteration is in ascending label order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members) {
        for (int v : members) insert(v);
    }
    template <typename Range>
    static VertexSet from_range(const Range& members) {
        VertexSet out;
        for (int v : members) out.insert(v);
        return out;
    }

    /// {0..n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    /// Lowest member; undefined on the empty set.
    constexpr int front() const noexcept { return std::countr_zero(bits_); }
    constexpr int back() const noexcept { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) noexcept { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    /// Orders by lowest member first (then the rest), i.e. lexicographically on sorted member lists.
    friend bool lex_less(VertexSet a, VertexSet b) {
        while (!a.empty() && !b.empty()) {
            if (a.front() != b.front()) return a.front() < b.front();
            a.erase(a.front());
            b.erase(b.front());
        }
        return a.empty() && !b.empty();
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto tmp = *this; ++*this; return tmp; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Undirected simple graph on {0..n-1}; row v holds the neighbours of v.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw Error(ErrorCode::TooLarge,
                        "graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
    }
    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return VertexSet::first(n_); }

    bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const noexcept { return VertexSet(rows_[v]); }
    int degree(int v) const noexcept { return std::popcount(rows_[v]); }

    int edge_count() const noexcept {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
        return twice / 2;
    }

    /// Edges (u,v) with u<v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet(rows_[u]) - VertexSet::first(u + 1)) out.emplace_back(u, v);
        return out;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }
    /// Unchecked variants for generators that already know the labels are valid.
    void set_edge_unchecked(int u, int v) noexcept {
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }
    void clear_edge_unchecked(int u, int v) noexcept {
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }

    bool operator==(const Graph& other) const noexcept {
        if (n_ != other.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (rows_[v] != other.rows_[v]) return false;
        return true;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error(ErrorCode::OutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside graph of order " +
                            std::to_string(n_));
        if (u == v) throw Error(ErrorCode::OutOfRange, "self-loop at vertex " + std::to_string(u));
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    const VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        for (int u : all - g.neighbors(v) - VertexSet::first(v + 1)) out.set_edge_unchecked(v, u);
    return out;
}

/// Connected components of g[within], reported in parent labels and ordered by lowest member.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

/// Number of odd-cardinality components of g[within].
inline int odd_components_within(const Graph& g, VertexSet within) {
    int odd = 0;
    for (VertexSet comp : components_within(g, within)) odd += comp.size() & 1;
    return odd;
}

struct ComponentProfile {
    std::vector<VertexSet> components;
    std::map<int, int> size_histogram;

    int odd_count() const {
        int odd = 0;
        for (auto [size, count] : size_histogram)
            if (size % 2 == 1) odd += count;
        return odd;
    }
};

inline ComponentProfile components(const Graph& g) {
    ComponentProfile profile;
    profile.components = components_within(g, g.vertices());
    for (VertexSet comp : profile.components) ++profile.size_histogram[comp.size()];
    return profile;
}

/// g[a] relabelled 0..|a|-1 in ascending order of the original labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels; ///< labels[i] = vertex of the parent graph

    VertexSet to_parent(VertexSet local) const {
        VertexSet out;
        for (int v : local) out.insert(labels[v]);
        return out;
    }
};

inline InducedSubgraph induced(const Graph& g, VertexSet a) {
    if (!a.subset_of(g.vertices()))
        throw Error(ErrorCode::OutOfRange,
                    "vertex " + std::to_string((a - g.vertices()).front()) + " not in graph of order " +
                        std::to_string(g.order()));
    InducedSubgraph out{Graph(a.size()), a.to_vector()};
    std::array<int, kMaxVertices> local{};
    for (int i = 0; i < static_cast<int>(out.labels.size()); ++i) local[out.labels[i]] = i;
    for (int u : a)
        for (int v : g.neighbors(u) & a)
            if (u < v) out.graph.set_edge_unchecked(local[u], local[v]);
    return out;
}

inline bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

inline bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

inline bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u) - VertexSet::first(u + 1))
            if ((g.neighbors(u) & g.neighbors(v)).bits() != 0) return false;
    return true;
}

/// Join of two graphs: disjoint union plus every edge between them. Labels of b are shifted by a.order().
inline Graph join(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.set_edge_unchecked(u, v);
    for (auto [u, v] : b.edges()) out.set_edge_unchecked(a.order() + u, a.order() + v);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) out.set_edge_unchecked(u, a.order() + v);
    return out;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge_unchecked(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n && n >= 3; ++v) g.set_edge_unchecked(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.set_edge_unchecked(v, v + 1);
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -- v+5.
inline Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.set_edge_unchecked(v, (v + 1) % 5);
        g.set_edge_unchecked(5 + v, 5 + (v + 2) % 5);
        g.set_edge_unchecked(v, v + 5);
    }
    return g;
}

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

} // namespace tihany

#endif // TIHANY_GRAPH_HPP
