#pragma once

#include <string>

#include "spanex/excess.hpp"
#include "spanex/graph.hpp"
#include "spanex/quotient.hpp"

namespace spanex {

// Extremal constructions. Block labeling convention throughout: join-clique
// vertices first, then the large clique block, then the independent block,
// so the quotient partitions are positional.

// K_s v (K_{n-(k-1)s-b-2} u ((k-2)s+b+2) K_1); requires n >= (k-1)s+b+3.
inline Graph build_b1_family(int n, int s, int k, int b) {
    if (s < 1 || k < 1 || b < 0) throw std::invalid_argument("need s >= 1, k >= 1, b >= 0");
    const int clique = n - (k - 1) * s - b - 2;
    const int indep = (k - 2) * s + b + 2;
    if (clique < 1)
        throw std::invalid_argument("order shortfall: clique block empty (need n >= (k-1)s+b+3)");
    return join(complete_graph(s), disjoint_union(complete_graph(clique), empty_graph(indep)));
}

// K_1 v (K_{n-k-b-1} u (k+b) K_1); requires n >= k+b+2. Identical to the b1
// family at s = 1.
inline Graph build_gstar(int n, int k, int b) {
    if (k < 1 || b < 0) throw std::invalid_argument("need k >= 1, b >= 0");
    if (n < k + b + 2) throw std::invalid_argument("clique block empty (need n >= k+b+2)");
    return join(complete_graph(1),
                disjoint_union(complete_graph(n - k - b - 1), empty_graph(k + b)));
}

// K_s v ((k-2)s+b+3) K_1, the complete split graph whose spectral radius has
// the closed form (s-1+sqrt((4k-7)s^2+(4b+10)s+1))/2.
inline Graph build_star_family(int s, int k, int b) {
    if (s < 1 || k < 2 || b < 0) throw std::invalid_argument("need s >= 1, k >= 2, b >= 0");
    return join(complete_graph(s), empty_graph((k - 2) * s + b + 3));
}

inline Graph build_family(const std::string& tag, int n, int s, int k, int b) {
    if (tag == "gstar") return build_gstar(n, k, b);
    if (tag == "b1") return build_b1_family(n, s, k, b);
    if (tag == "star") return build_star_family(s, k, b);
    throw std::invalid_argument("unknown family tag: " + tag);
}

namespace detail {

inline VertexSet range_set(int lo, int hi) {  // [lo, hi)
    VertexSet s;
    for (int v = lo; v < hi; ++v) s.add(v);
    return s;
}

}  // namespace detail

// The positional cell partition of a family graph: join block, clique block,
// independent block (two cells for the star family, which has no clique block).
inline Partition b1_family_partition(int n, int s, int k, int b) {
    const int clique = n - (k - 1) * s - b - 2;
    return Partition::of({detail::range_set(0, s), detail::range_set(s, s + clique),
                          detail::range_set(s + clique, n)});
}

inline Partition gstar_partition(int n, int k, int b) { return b1_family_partition(n, 1, k, b); }

inline Partition star_family_partition(int s, int k, int b) {
    const int n = s + (k - 2) * s + b + 3;
    return Partition::of({detail::range_set(0, s), detail::range_set(s, n)});
}

enum class CertMode { exact_search, structural };

struct ExceptionCertificate {
    bool is_exception = false;  // min total k-excess exceeds b
    int min_excess = 0;         // always b+1 for a well-formed gstar
    CertMode mode = CertMode::exact_search;
};

// Certifies that gstar(n,k,b) has no spanning tree with te <= b. Within the
// exact-search scope this runs the branch-and-bound minimizer. Above it the
// certificate is structural: the k+b independent vertices have the hub as
// their only neighbor, so every spanning tree uses all k+b hub-pendant edges
// plus at least one hub-clique edge, forcing hub degree >= k+b+1 and hence
// te >= b+1; a hub-star-plus-clique-path tree attains te = b+1 exactly.
inline ExceptionCertificate verify_gstar_is_exception_detail(int n, int k, int b) {
    const Graph g = build_gstar(n, k, b);
    ExceptionCertificate cert;
    if (n <= kExactSearchMaxOrder) {
        cert.mode = CertMode::exact_search;
        cert.min_excess = min_total_excess_exact(g, k).value;
        cert.is_exception = cert.min_excess > b;
        return cert;
    }
    cert.mode = CertMode::structural;
    const int clique = n - k - b - 1;
    // verify the forced structure on the graph object itself
    for (int v = clique + 1; v < n; ++v)
        if (g.degree(v) != 1 || !g.has_edge(0, v))
            throw std::logic_error("pendant block malformed");
    for (int v = 1; v <= clique; ++v)
        if ((g.neighbors(v) & ~VertexSet::full(clique + 1).bits) != 0)
            throw std::logic_error("clique block has edges into the pendant block");
    // witness attaining the forced minimum: hub to every pendant and to the
    // first clique vertex, then a path through the clique block
    std::vector<std::pair<int, int>> edges;
    for (int v = clique + 1; v < n; ++v) edges.emplace_back(0, v);
    edges.emplace_back(0, 1);
    for (int v = 1; v < clique; ++v) edges.emplace_back(v, v + 1);
    const int attained = total_excess(SpanningTree::from_edges(g, edges), k);
    if (attained != b + 1) throw std::logic_error("structural witness does not attain b+1");
    cert.min_excess = b + 1;
    cert.is_exception = true;
    return cert;
}

inline bool verify_gstar_is_exception(int n, int k, int b) {
    return verify_gstar_is_exception_detail(n, k, b).is_exception;
}

}  // namespace spanex
