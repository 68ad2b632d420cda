#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "spanex/graph.hpp"

namespace spanex {

inline constexpr int kIsomorphismMaxOrder = 9;

namespace detail {

// Per-vertex invariant: own degree plus the sorted multiset of neighbor degrees.
inline std::vector<std::vector<int>> degree_signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.push_back(g.degree(v));
        for (int u : VertexSet{g.neighbors(v)}.vertices()) s.push_back(g.degree(u));
        std::sort(s.begin() + 1, s.end());
    }
    return sig;
}

}  // namespace detail

// Brute-force isomorphism test for orders up to 9, pruned by degree and
// neighborhood-degree-multiset invariants.
inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() > kIsomorphismMaxOrder || g2.order() > kIsomorphismMaxOrder)
        throw ScopeError("order exceeds isomorphism scope (9)");
    const int n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;

    const auto sig1 = detail::degree_signatures(g1);
    const auto sig2 = detail::degree_signatures(g2);
    {
        auto a = sig1, b = sig2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    // Map vertices of g1 in order of ascending signature frequency (rarest first).
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::vector<int> freq(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (sig1[static_cast<std::size_t>(v)] == sig1[static_cast<std::size_t>(u)])
                ++freq[static_cast<std::size_t>(v)];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return freq[static_cast<std::size_t>(a)] < freq[static_cast<std::size_t>(b)];
    });

    std::array<int, kIsomorphismMaxOrder> image{};
    image.fill(-1);
    std::uint64_t used = 0;

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1u) continue;
            if (sig1[static_cast<std::size_t>(v)] != sig2[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int v2 = order[static_cast<std::size_t>(d)];
                if (g1.has_edge(v, v2) != g2.has_edge(w, image[static_cast<std::size_t>(v2)]))
                    ok = false;
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used |= std::uint64_t{1} << w;
            if (self(self, depth + 1)) return true;
            used &= ~(std::uint64_t{1} << w);
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// Relabel vertices: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace spanex
