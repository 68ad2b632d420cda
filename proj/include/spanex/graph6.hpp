#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "spanex/graph.hpp"

namespace spanex {

// graph6 codec, single-byte length form only (n <= 62).
//
// Layout: byte 0 is 63+n; the following ceil(n(n-1)/2 / 6) bytes pack the
// upper triangle column-major -- bit p = j(j-1)/2 + i encodes edge {i,j} for
// i < j -- six bits per byte, most significant first, each byte offset by 63.
// Unused bits of the final byte must be zero.

inline constexpr int kGraph6MaxOrder = 62;

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("empty graph6 string", 0);
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    if (byte(0) == 126)
        throw Graph6ParseError("multi-byte order form unsupported (order must be <= 62)", 0);
    if (byte(0) < 63 || byte(0) > 126)
        throw Graph6ParseError("malformed length character", 0);
    const int n = byte(0) - 63;

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes)
        throw Graph6ParseError("graph6 string too short", text.size());
    if (text.size() > 1 + nbytes)
        throw Graph6ParseError("trailing characters after graph6 payload", 1 + nbytes);

    Graph g(n);
    std::size_t p = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++p) {
            const std::size_t t = 1 + p / 6;
            const unsigned char c = byte(t);
            if (c < 63 || c > 126) throw Graph6ParseError("non-printable payload byte", t);
            if ((c - 63) >> (5 - p % 6) & 1) g.add_edge(i, j);
        }
    }
    // padding bits beyond the triangle must be zero
    for (; p < nbytes * 6; ++p) {
        const std::size_t t = 1 + p / 6;
        const unsigned char c = byte(t);
        if (c < 63 || c > 126) throw Graph6ParseError("non-printable payload byte", t);
        if ((c - 63) >> (5 - p % 6) & 1) throw Graph6ParseError("nonzero trailing bits", t);
    }
    return g;
}

inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw ScopeError("graph6 emission limited to order <= 62");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (g.has_edge(i, j)) out[1 + p / 6] += static_cast<char>(1 << (5 - p % 6));
    return out;
}

}  // namespace spanex
