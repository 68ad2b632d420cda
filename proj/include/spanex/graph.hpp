#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spanex/errors.hpp"

namespace spanex {

inline constexpr int kMaxOrder = 64;  // per-vertex adjacency fits one 64-bit word

// Subset of the vertex range 0..n-1 of some host graph, as a bitset.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
    static VertexSet full(int n) {
        return {n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits; m;) {
            int v = std::countr_zero(m);
            out.push_back(v);
            m &= m - 1;
        }
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Undirected simple graph on vertices 0..n-1. Adjacency is stored as one
// bitset row per vertex; the relation stays symmetric and loop-free.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        if (n > kMaxOrder) throw ScopeError("graph order exceeds " + std::to_string(kMaxOrder));
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (const auto row : rows_) twice += std::popcount(row);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t m = rows_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1); m;) {
                int v = std::countr_zero(m);
                out.emplace_back(u, v);
                m &= m - 1;
            }
        return out;
    }

    // Dense 0/1 view, row-major n*n, for the eigensolvers.
    std::vector<double> adjacency_matrix() const {
        std::vector<double> a(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t m = rows_[static_cast<std::size_t>(u)]; m;) {
                int v = std::countr_zero(m);
                a[static_cast<std::size_t>(u) * n_ + v] = 1.0;
                m &= m - 1;
            }
        return a;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline Graph complete_graph(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

// m isolated vertices (the graph m*K_1).
inline Graph empty_graph(int m) { return Graph(m); }

// G1 + G2 side by side, G1's vertices first, no cross edges.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    return g;
}

// Disjoint union plus all n1*n2 cross edges; G1's vertices come first.
inline Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    const int n1 = g1.order();
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < g.order(); ++v) g.add_edge(u, v);
    return g;
}

// Component of `start` inside the vertex mask `allowed`, grown by frontier expansion.
inline std::uint64_t component_mask(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
            int v = std::countr_zero(m);
            next |= g.neighbors(v);
            m &= m - 1;
        }
        frontier = next & allowed & ~comp;
        comp |= frontier;
    }
    return comp;
}

struct ComponentSplit {
    int count = 0;
    std::vector<VertexSet> components;
};

// Components of G - S. S must be a proper subset of V(G); the empty set is
// allowed (then this is just the component structure of G).
inline ComponentSplit components_after_deletion(const Graph& g, VertexSet s) {
    const std::uint64_t all = VertexSet::full(g.order()).bits;
    if ((s.bits & ~all) != 0) throw std::invalid_argument("S is not a subset of V(G)");
    std::uint64_t residual = all & ~s.bits;
    if (residual == 0) throw std::invalid_argument("empty residual graph");
    ComponentSplit out;
    while (residual) {
        int v = std::countr_zero(residual);
        std::uint64_t comp = component_mask(g, v, residual);
        out.components.push_back({comp});
        residual &= ~comp;
        ++out.count;
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("connectivity undefined for the empty graph");
    return components_after_deletion(g, VertexSet{}).count == 1;
}

}  // namespace spanex
