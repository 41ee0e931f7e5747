#ifndef TIHANY_IO_HPP
#define TIHANY_IO_HPP

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "graph.hpp"

// graph6 and plain edge-list serialization.
//
// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
// each byte offset by 63. N(n) is one byte for n <= 62, '~' plus three
// bytes for n <= 258047 and "~~" plus six bytes beyond that.

namespace tihany {

namespace detail {

inline Error malformed_at(std::size_t offset, const std::string& what) {
    return Error(ErrorCode::MalformedInput, what + " at byte offset " + std::to_string(offset));
}

inline void append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

} // namespace detail

inline std::string serialize_graph6(const Graph& g) {
    std::string out;
    detail::append_size(out, static_cast<std::uint64_t>(g.order()));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Parses one graph6 record. A leading ">>graph6<<" header and trailing line
/// terminators are accepted. Graphs above `max_order` are rejected with TooLarge.
inline Graph parse_graph6(std::string_view text, int max_order = kMaxVertices) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw detail::malformed_at(base, "empty graph6 record");

    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw detail::malformed_at(base + i, "byte " + std::to_string(c) + " outside [63,126]");
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take6 = [&](int count) {
        for (int k = 0; k < count; ++k) {
            if (pos >= text.size()) throw detail::malformed_at(base + pos, "truncated vertex count");
            n = (n << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
        }
    };
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(text[0] - 63);
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        pos = 2;
        take6(6);
    } else {
        pos = 1;
        take6(3);
    }
    if (n > static_cast<std::uint64_t>(max_order))
        throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n) + " exceeds vertex cap " +
                                             std::to_string(max_order));

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos != body)
        throw detail::malformed_at(base + pos, "expected " + std::to_string(body) + " adjacency bytes, found " +
                                                   std::to_string(text.size() - pos));

    Graph g(order);
    std::size_t bit = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = text[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.set_edge_unchecked(i, j);
        }
    }
    return g;
}

/// "n m" on the first line, then m lines "u v" with 0-based labels.
inline std::string serialize_edgelist(const Graph& g) {
    const auto edges = g.edges();
    std::ostringstream out;
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_edgelist(std::string_view text, int max_order = kMaxVertices) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw Error(ErrorCode::MalformedInput, "edge list header must be \"n m\" with nonnegative integers");
    if (n > max_order)
        throw Error(ErrorCode::TooLarge,
                    "edge list order " + std::to_string(n) + " exceeds vertex cap " + std::to_string(max_order));
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v))
            throw Error(ErrorCode::MalformedInput,
                        "edge list declares " + std::to_string(m) + " edges but edge " + std::to_string(e + 1) +
                            " is missing or not numeric");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw Error(ErrorCode::MalformedInput, "edge " + std::to_string(e + 1) + " (" + std::to_string(u) +
                                                       "," + std::to_string(v) + ") is not a valid pair");
        g.set_edge_unchecked(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (in >> extra) throw Error(ErrorCode::MalformedInput, "trailing data after " + std::to_string(m) + " edges");
    return g;
}

} // namespace tihany

#endif // TIHANY_IO_HPP
