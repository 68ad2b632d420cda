#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <vector>

#include "spanex/graph.hpp"

namespace spanex {

inline constexpr int kExactSearchMaxOrder = 12;
inline constexpr int kOracleMinOrder = 3;
inline constexpr int kOracleMaxOrder = 8;
inline constexpr int kSubsetScanMaxOrder = 22;

// Spanning tree of a host graph: parent array rooted at vertex 0 plus the
// sorted edge list.
struct SpanningTree {
    int n = 0;
    std::vector<int> parent;                 // parent[0] == -1
    std::vector<std::pair<int, int>> edges;  // n-1 edges, (u < v), ascending

    static SpanningTree from_edges(const Graph& host, std::vector<std::pair<int, int>> edges) {
        const int n = host.order();
        if (static_cast<int>(edges.size()) != n - 1)
            throw std::invalid_argument("spanning tree needs exactly n-1 edges");
        Graph t(n);
        for (auto& [u, v] : edges) {
            if (!host.has_edge(u, v)) throw std::invalid_argument("tree edge not in host graph");
            if (u > v) std::swap(u, v);
            t.add_edge(u, v);
        }
        SpanningTree st;
        st.n = n;
        st.parent.assign(static_cast<std::size_t>(n), -2);
        st.parent[0] = -1;
        std::vector<int> stack{0};
        int visited = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++visited;
            for (int u : VertexSet{t.neighbors(v)}.vertices())
                if (st.parent[static_cast<std::size_t>(u)] == -2) {
                    st.parent[static_cast<std::size_t>(u)] = v;
                    stack.push_back(u);
                }
        }
        if (visited != n) throw std::invalid_argument("edge set does not span the graph");
        std::sort(edges.begin(), edges.end());
        st.edges = std::move(edges);
        return st;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            ++d[static_cast<std::size_t>(u)];
            ++d[static_cast<std::size_t>(v)];
        }
        return d;
    }
};

// te(T, k) = sum over vertices of max(0, deg_T(v) - k).
inline int total_excess(const SpanningTree& t, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    int te = 0;
    for (int d : t.degrees()) te += std::max(0, d - k);
    return te;
}

enum class ExcessMethod { exact, heuristic, oracle };

inline const char* to_string(ExcessMethod m) {
    switch (m) {
        case ExcessMethod::exact: return "exact";
        case ExcessMethod::heuristic: return "heuristic";
        case ExcessMethod::oracle: return "oracle";
    }
    return "?";
}

struct ExcessResult {
    int value = 0;
    SpanningTree witness;
    ExcessMethod method = ExcessMethod::exact;
    long long nodes_explored = 0;
};

namespace detail {

struct Dsu {
    std::array<signed char, kExactSearchMaxOrder> parent{};

    void reset(int n) {
        for (int i = 0; i < n; ++i)
            parent[static_cast<std::size_t>(i)] = static_cast<signed char>(i);
    }
    int find(int v) const {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    }
    bool unite(int u, int v) {
        u = find(u);
        v = find(v);
        if (u == v) return false;
        parent[static_cast<std::size_t>(u)] = static_cast<signed char>(v);
        return true;
    }
};

struct ExactSearch {
    int n = 0, k = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    long long nodes = 0;
    int best_value = INT_MAX;
    std::vector<std::pair<int, int>> found_edges;
    std::optional<int> bound;  // decision cutoff
    bool stop = false;
    std::vector<std::pair<int, int>> include_stack;

    // Committed edges plus every undecided edge must still span the graph.
    bool feasible(const Dsu& dsu, int from) const {
        Dsu f = dsu;
        int comps = 0;
        for (int i = 0; i < n; ++i)
            if (f.find(i) == i) ++comps;
        for (int i = from; i < m && comps > 1; ++i)
            if (f.unite(edges[static_cast<std::size_t>(i)].first,
                        edges[static_cast<std::size_t>(i)].second))
                --comps;
        return comps == 1;
    }

    // Phase 1: minimize te. The lower bound at a node is the excess already
    // forced by committed degrees (including more edges never lowers it).
    void minimize(int idx, const Dsu& dsu, std::array<signed char, kExactSearchMaxOrder> deg,
                  int cnt, int excess) {
        ++nodes;
        if (stop) return;
        if (cnt == n - 1) {
            if (excess < best_value) {
                best_value = excess;
                if (bound && excess <= *bound) {
                    found_edges = include_stack;
                    stop = true;
                }
            }
            return;
        }
        if (idx == m) return;
        const auto [u, v] = edges[static_cast<std::size_t>(idx)];
        Dsu d2 = dsu;
        if (d2.unite(u, v)) {
            auto deg2 = deg;
            int ex2 = excess;
            if (++deg2[static_cast<std::size_t>(u)] > k) ++ex2;
            if (++deg2[static_cast<std::size_t>(v)] > k) ++ex2;
            if (ex2 < best_value) {
                include_stack.push_back(edges[static_cast<std::size_t>(idx)]);
                minimize(idx + 1, d2, deg2, cnt + 1, ex2);
                include_stack.pop_back();
            }
        }
        if (stop) return;
        if (feasible(dsu, idx + 1)) minimize(idx + 1, dsu, deg, cnt, excess);
    }

    // Phase 2: with edges in ascending lex order, include-first DFS pruned at
    // the known minimum returns the lexicographically smallest optimal tree.
    bool pick_witness(int idx, const Dsu& dsu, std::array<signed char, kExactSearchMaxOrder> deg,
                      int cnt, int excess, int target) {
        ++nodes;
        if (cnt == n - 1) {
            found_edges = include_stack;
            return true;
        }
        if (idx == m) return false;
        const auto [u, v] = edges[static_cast<std::size_t>(idx)];
        Dsu d2 = dsu;
        if (d2.unite(u, v)) {
            auto deg2 = deg;
            int ex2 = excess;
            if (++deg2[static_cast<std::size_t>(u)] > k) ++ex2;
            if (++deg2[static_cast<std::size_t>(v)] > k) ++ex2;
            if (ex2 <= target) {
                include_stack.push_back(edges[static_cast<std::size_t>(idx)]);
                if (pick_witness(idx + 1, d2, deg2, cnt + 1, ex2, target)) return true;
                include_stack.pop_back();
            }
        }
        if (feasible(dsu, idx + 1)) return pick_witness(idx + 1, dsu, deg, cnt, excess, target);
        return false;
    }
};

}  // namespace detail

// Global minimum of te(T, k) over all spanning trees of G, by branch and
// bound over edge inclusion/exclusion. Edges are decided in descending order
// of min(endpoint degree in G), so high-degree decisions come first.
//
// With `upper_bound` the search stops at the first tree with te <= bound
// (decision mode); the reported value is then that tree's te, not
// necessarily the global minimum. Witness ties in full minimization are
// broken toward the lexicographically smallest edge list.
inline ExcessResult min_total_excess_exact(const Graph& g, int k,
                                           std::optional<int> upper_bound = {}) {
    const int n = g.order();
    if (n < 1 || !is_connected(g))
        throw std::invalid_argument("exact excess search requires a connected graph");
    if (n > kExactSearchMaxOrder)
        throw ScopeError("order exceeds exact search scope (12); use the heuristic");
    if (k < 1) throw std::invalid_argument("k must be >= 1");

    ExcessResult res;
    res.method = ExcessMethod::exact;
    if (n == 1) {
        res.witness.n = 1;
        res.witness.parent = {-1};
        return res;
    }

    detail::ExactSearch search;
    search.n = n;
    search.k = k;
    search.edges = g.edges();
    search.m = static_cast<int>(search.edges.size());
    search.bound = upper_bound;
    std::sort(search.edges.begin(), search.edges.end(), [&](const auto& a, const auto& b) {
        const int ka = std::min(g.degree(a.first), g.degree(a.second));
        const int kb = std::min(g.degree(b.first), g.degree(b.second));
        if (ka != kb) return ka > kb;
        return a < b;
    });

    detail::Dsu dsu;
    dsu.reset(n);
    std::array<signed char, kExactSearchMaxOrder> deg{};
    search.minimize(0, dsu, deg, 0, 0);

    if (!search.stop) {
        std::sort(search.edges.begin(), search.edges.end());
        dsu.reset(n);
        deg.fill(0);
        search.include_stack.clear();
        search.found_edges.clear();
        search.pick_witness(0, dsu, deg, 0, 0, search.best_value);
    }
    res.witness = SpanningTree::from_edges(g, search.found_edges);
    res.value = total_excess(res.witness, k);
    res.nodes_explored = search.nodes;
    return res;
}

// Decision form: does G contain a spanning tree with te(T, k) <= b?
inline bool has_bounded_excess_tree(const Graph& g, int k, int b) {
    if (b < 0) throw std::invalid_argument("b must be nonnegative");
    return min_total_excess_exact(g, k, b).value <= b;
}

namespace detail {

// Decode a Pruefer sequence into tree edges (smallest-leaf-first inverse map).
inline void prufer_decode(const std::vector<int>& seq, int n,
                          std::vector<std::pair<int, int>>& edges_out) {
    edges_out.clear();
    std::array<signed char, 16> deg{};
    for (int i = 0; i < n; ++i) deg[static_cast<std::size_t>(i)] = 1;
    for (int v : seq) ++deg[static_cast<std::size_t>(v)];
    std::uint64_t leaves = 0;
    for (int i = 0; i < n; ++i)
        if (deg[static_cast<std::size_t>(i)] == 1) leaves |= std::uint64_t{1} << i;
    for (int v : seq) {
        const int leaf = std::countr_zero(leaves);
        leaves &= leaves - 1;
        edges_out.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--deg[static_cast<std::size_t>(v)] == 1) leaves |= std::uint64_t{1} << v;
    }
    const int a = std::countr_zero(leaves);
    leaves &= leaves - 1;
    const int c = std::countr_zero(leaves);
    edges_out.emplace_back(std::min(a, c), std::max(a, c));
}

}  // namespace detail

// Exhaustive oracle: enumerate all n^(n-2) labeled trees by Pruefer
// sequence, keep those whose edges all lie in E(G), return the minimum
// total k-excess. Independent of the branch-and-bound path.
inline int prufer_oracle_min_excess(const Graph& g, int k) {
    const int n = g.order();
    if (n < kOracleMinOrder || n > kOracleMaxOrder)
        throw ScopeError("Pruefer oracle scope is 3 <= n <= 8");
    if (!is_connected(g)) throw std::invalid_argument("oracle requires a connected graph");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");

    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    int best = INT_MAX;
    for (;;) {
        detail::prufer_decode(seq, n, edges);
        bool inside = true;
        for (auto [u, v] : edges)
            if (!g.has_edge(u, v)) {
                inside = false;
                break;
            }
        if (inside) {
            std::array<signed char, 16> deg{};
            for (auto [u, v] : edges) {
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
            }
            int te = 0;
            for (int i = 0; i < n; ++i) te += std::max(0, deg[static_cast<std::size_t>(i)] - k);
            best = std::min(best, te);
            if (best == 0) return 0;
        }
        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return best;
}

// Local search: start from a BFS tree, repeatedly apply the first
// te-decreasing swap T - f + e over non-tree edges e and tree edges f on the
// fundamental cycle of e; deterministic restarts rotate the BFS root.
// The result is an upper bound on the true minimum.
inline ExcessResult min_total_excess_heuristic(const Graph& g, int k, int restarts = 1) {
    const int n = g.order();
    if (n < 1 || !is_connected(g))
        throw std::invalid_argument("heuristic requires a connected graph");
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");

    ExcessResult best;
    best.method = ExcessMethod::heuristic;
    best.value = INT_MAX;
    long long swaps_evaluated = 0;

    const auto all_edges = g.edges();
    auto tree_excess = [&](const Graph& t) {
        int te = 0;
        for (int v = 0; v < n; ++v) te += std::max(0, t.degree(v) - k);
        return te;
    };

    for (int r = 0; r < restarts; ++r) {
        const int root = r % n;
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        parent[static_cast<std::size_t>(root)] = -1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int u : VertexSet{g.neighbors(queue[qi])}.vertices())
                if (parent[static_cast<std::size_t>(u)] == -2) {
                    parent[static_cast<std::size_t>(u)] = queue[qi];
                    queue.push_back(u);
                }
        Graph tree(n);
        for (int v = 0; v < n; ++v)
            if (parent[static_cast<std::size_t>(v)] >= 0)
                tree.add_edge(v, parent[static_cast<std::size_t>(v)]);

        int cur = tree_excess(tree);
        bool improved = true;
        while (improved && cur > 0) {
            improved = false;
            for (auto [u, v] : all_edges) {
                if (tree.has_edge(u, v)) continue;
                // fundamental-cycle path u..v via parents of a BFS inside the tree
                std::vector<int> par(static_cast<std::size_t>(n), -2);
                par[static_cast<std::size_t>(u)] = -1;
                std::vector<int> q2{u};
                for (std::size_t qi = 0; qi < q2.size(); ++qi)
                    for (int w : VertexSet{tree.neighbors(q2[qi])}.vertices())
                        if (par[static_cast<std::size_t>(w)] == -2) {
                            par[static_cast<std::size_t>(w)] = q2[qi];
                            q2.push_back(w);
                        }
                for (int w = v; par[static_cast<std::size_t>(w)] != -1;
                     w = par[static_cast<std::size_t>(w)]) {
                    const int p = par[static_cast<std::size_t>(w)];
                    ++swaps_evaluated;
                    tree.remove_edge(w, p);
                    tree.add_edge(u, v);
                    const int next = tree_excess(tree);
                    if (next < cur) {
                        cur = next;
                        improved = true;
                        break;
                    }
                    tree.add_edge(w, p);
                    tree.remove_edge(u, v);
                }
                if (improved) break;
            }
        }
        if (cur < best.value) {
            best.value = cur;
            best.witness = SpanningTree::from_edges(g, tree.edges());
        }
        if (best.value == 0) break;
    }
    best.nodes_explored = swaps_evaluated;
    return best;
}

// One subset's violation data for the cut condition
// c(G - S) <= (k-2)|S| + b + 2.
struct WinViolation {
    VertexSet subset;
    int slack = 0;       // c(G-S) - ((k-2)|S| + b + 2); violation iff > 0
    int components = 0;  // c(G-S)
    int bound = 0;       // (k-2)|S| + b + 2
};

// Scans all proper subsets S (by increasing |S|, then lexicographically;
// first argmax kept) and returns the subset maximizing the slack. The cut
// condition holds iff the returned slack is <= 0. The empty set joins the
// scan only when `include_empty` is set.
inline WinViolation win_condition_worst_violator(const Graph& g, int k, int b,
                                                 bool include_empty = false) {
    const int n = g.order();
    if (n < 1 || !is_connected(g))
        throw std::invalid_argument("cut-condition scan requires a connected graph");
    if (k < 2) throw std::invalid_argument("cut condition requires k >= 2");
    if (b < 0) throw std::invalid_argument("b must be nonnegative");
    if (n > kSubsetScanMaxOrder)
        throw ScopeError("order exceeds subset scan scope (22); use sampled mode");

    WinViolation best;
    bool have = false;
    // K_1 has no nonempty proper subset; the empty set is the only witness
    const int min_size = (include_empty || n == 1) ? 0 : 1;
    for (int size = min_size; size < n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            VertexSet s;
            for (int v : pick) s.add(v);
            const int comps = components_after_deletion(g, s).count;
            const int bound = (k - 2) * size + b + 2;
            if (!have || comps - bound > best.slack) {
                best = {s, comps - bound, comps, bound};
                have = true;
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return best;
}

inline bool win_condition_holds(const Graph& g, int k, int b, bool include_empty = false) {
    return win_condition_worst_violator(g, k, b, include_empty).slack <= 0;
}

}  // namespace spanex
