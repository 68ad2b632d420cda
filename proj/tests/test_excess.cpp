#include <catch2/catch_amalgamated.hpp>

#include "spanex/excess.hpp"
#include "spanex/extremal.hpp"

#include "oracles.hpp"

using namespace spanex;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

}  // namespace

TEST_CASE("total excess of fixed trees") {
    const Graph p5 = path_graph(5);
    const SpanningTree t5 = SpanningTree::from_edges(p5, p5.edges());
    REQUIRE(total_excess(t5, 2) == 0);

    const Graph s6 = join(complete_graph(1), empty_graph(6));
    const SpanningTree star_tree = SpanningTree::from_edges(s6, s6.edges());
    REQUIRE(total_excess(star_tree, 5) == 1);

    // double star: adjacent centers of degree 4 each
    Graph ds(8);
    ds.add_edge(0, 1);
    for (int leaf : {2, 3, 4}) ds.add_edge(0, leaf);
    for (int leaf : {5, 6, 7}) ds.add_edge(1, leaf);
    REQUIRE(total_excess(SpanningTree::from_edges(ds, ds.edges()), 3) == 2);
}

TEST_CASE("spanning tree validation") {
    const Graph k4 = complete_graph(4);
    REQUIRE_THROWS_AS(SpanningTree::from_edges(k4, {{0, 1}, {1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(SpanningTree::from_edges(k4, {{0, 1}, {1, 2}, {0, 2}}),
                      std::invalid_argument);  // cycle, does not span
    const Graph p4 = path_graph(4);
    REQUIRE_THROWS_AS(SpanningTree::from_edges(p4, {{0, 1}, {1, 2}, {0, 3}}),
                      std::invalid_argument);  // (0,3) not in host
}

TEST_CASE("exact minimum total excess") {
    const Graph s6 = join(complete_graph(1), empty_graph(6));
    const ExcessResult r1 = min_total_excess_exact(s6, 5);
    REQUIRE(r1.value == 1);
    REQUIRE(total_excess(r1.witness, 5) == 1);
    REQUIRE(r1.method == ExcessMethod::exact);

    const ExcessResult r2 = min_total_excess_exact(complete_graph(7), 2);
    REQUIRE(r2.value == 0);
    REQUIRE(total_excess(r2.witness, 2) == 0);

    REQUIRE(min_total_excess_exact(build_gstar(9, 5, 1), 5).value == 2);

    SECTION("errors") {
        REQUIRE_THROWS_AS(min_total_excess_exact(disjoint_union(complete_graph(2), complete_graph(2)), 2),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(min_total_excess_exact(complete_graph(13), 3), ScopeError);
    }

    SECTION("witness is deterministic") {
        const auto a = min_total_excess_exact(complete_graph(6), 2);
        const auto b = min_total_excess_exact(complete_graph(6), 2);
        REQUIRE(a.value == b.value);
        REQUIRE(a.witness.edges == b.witness.edges);
    }

    SECTION("witness is the lexicographically smallest optimal tree") {
        // brute-force oracle: enumerate every labeled tree by Pruefer code,
        // keep the spanning trees of G attaining the minimum, take the lex
        // smallest sorted edge list
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 3);  // 4..6
            const Graph g = test_oracle::random_connected_graph(rng, n, 0.5);
            for (int k = 1; k <= 3; ++k) {
                const ExcessResult res = min_total_excess_exact(g, k);
                int best = INT_MAX;
                std::vector<std::pair<int, int>> best_edges;
                std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
                for (;;) {
                    std::vector<std::pair<int, int>> edges;
                    detail::prufer_decode(seq, n, edges);
                    bool inside = true;
                    for (auto [u, v] : edges)
                        if (!g.has_edge(u, v)) inside = false;
                    if (inside) {
                        const SpanningTree t = SpanningTree::from_edges(g, edges);
                        const int te = total_excess(t, k);
                        if (te < best || (te == best && t.edges < best_edges)) {
                            best = te;
                            best_edges = t.edges;
                        }
                    }
                    int pos = n - 3;
                    while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) {
                        seq[static_cast<std::size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++seq[static_cast<std::size_t>(pos)];
                }
                REQUIRE(res.value == best);
                REQUIRE(res.witness.edges == best_edges);
            }
        }
    }
}

TEST_CASE("bounded excess decision") {
    const Graph s6 = join(complete_graph(1), empty_graph(6));
    REQUIRE_FALSE(has_bounded_excess_tree(s6, 5, 0));
    REQUIRE(has_bounded_excess_tree(s6, 5, 1));
    REQUIRE(has_bounded_excess_tree(complete_graph(7), 5, 0));
}

TEST_CASE("Pruefer oracle") {
    REQUIRE(prufer_oracle_min_excess(complete_graph(4), 1) == 2);
    const Graph s6 = join(complete_graph(1), empty_graph(6));
    REQUIRE(prufer_oracle_min_excess(s6, 5) == 1);
    REQUIRE(prufer_oracle_min_excess(cycle_graph(5), 2) == 0);
    REQUIRE_THROWS_AS(prufer_oracle_min_excess(complete_graph(9), 2), ScopeError);
    REQUIRE_THROWS_AS(prufer_oracle_min_excess(complete_graph(2), 1), ScopeError);

    SECTION("oracle equivalence on random graphs") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 6);
            const Graph g = test_oracle::random_connected_graph(rng, n, 0.5);
            for (int k = 2; k <= 5; ++k)
                REQUIRE(min_total_excess_exact(g, k).value == prufer_oracle_min_excess(g, k));
        }
    }
}

TEST_CASE("swap heuristic") {
    const Graph s6 = join(complete_graph(1), empty_graph(6));
    const ExcessResult r = min_total_excess_heuristic(s6, 5, 3);
    REQUIRE(r.value == 1);
    REQUIRE(r.method == ExcessMethod::heuristic);
    REQUIRE(total_excess(r.witness, 5) == r.value);

    REQUIRE(min_total_excess_heuristic(cycle_graph(7), 2, 1).value == 0);

    SECTION("never below the exact minimum, witness always consistent") {
        std::mt19937_64 rng(47);
        int matches = 0, total = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 6);
            const Graph g = test_oracle::random_connected_graph(rng, n, 0.4);
            for (int k = 1; k <= 4; ++k) {
                const int exact = min_total_excess_exact(g, k).value;
                const ExcessResult h = min_total_excess_heuristic(g, k, 2);
                REQUIRE(h.value >= exact);
                REQUIRE(total_excess(h.witness, k) == h.value);
                ++total;
                if (h.value == exact) ++matches;
            }
        }
        // local search on desk-scale graphs should agree almost always
        REQUIRE(matches > total * 3 / 4);
    }
}

TEST_CASE("excess monotonicity properties") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = test_oracle::random_connected_graph(rng, n, 0.4);

        // non-increasing in k, and zero once k >= n-1
        int prev = INT_MAX;
        for (int k = 1; k <= n - 1; ++k) {
            const int v = min_total_excess_exact(g, k).value;
            REQUIRE(v <= prev);
            prev = v;
        }
        REQUIRE(prev == 0);

        // adding an edge never increases the minimum
        Graph g2 = g;
        bool added = false;
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v)
                if (!g2.has_edge(u, v)) {
                    g2.add_edge(u, v);
                    added = true;
                }
        if (added)
            for (int k = 1; k <= 3; ++k)
                REQUIRE(min_total_excess_exact(g2, k).value <= min_total_excess_exact(g, k).value);
    }
}

TEST_CASE("cut condition worst violator") {
    const Graph s6 = join(complete_graph(1), empty_graph(6));

    SECTION("the star fails at b=0 with the hub as witness") {
        const WinViolation v = win_condition_worst_violator(s6, 5, 0);
        REQUIRE(v.slack == 1);
        REQUIRE(v.subset.vertices() == std::vector<int>{0});
        REQUIRE(v.components == 6);
        REQUIRE(v.bound == 5);
        REQUIRE_FALSE(win_condition_holds(s6, 5, 0));
        REQUIRE(win_condition_holds(s6, 5, 1));
    }

    SECTION("complete graphs satisfy the condition comfortably") {
        const WinViolation v = win_condition_worst_violator(complete_graph(7), 5, 0);
        REQUIRE(v.slack == -4);
        REQUIRE(v.subset.size() == 1);
        REQUIRE(win_condition_holds(complete_graph(7), 5, 0));
    }

    SECTION("the empty-set convention changes the reported maximum") {
        const WinViolation v = win_condition_worst_violator(complete_graph(7), 5, 0, true);
        REQUIRE(v.slack == -1);  // c(G) - (b+2) = 1 - 2
        REQUIRE(v.subset.empty());
    }

    SECTION("gstar hub always overshoots the bound by one") {
        for (auto [n, k, b] : {std::tuple{9, 5, 1}, {10, 6, 0}, {12, 7, 2}}) {
            const WinViolation v = win_condition_worst_violator(build_gstar(n, k, b), k, b);
            REQUIRE(v.slack == 1);
            REQUIRE(v.subset.vertices() == std::vector<int>{0});
            REQUIRE(v.components == k + b + 1);
        }
    }

    SECTION("scope and validation errors") {
        REQUIRE_THROWS_AS(win_condition_worst_violator(s6, 1, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(
            win_condition_worst_violator(disjoint_union(complete_graph(2), complete_graph(2)), 5, 0),
            std::invalid_argument);
        REQUIRE_THROWS_AS(win_condition_worst_violator(complete_graph(23), 5, 0), ScopeError);
    }

    SECTION("single vertex falls back to the empty subset") {
        const WinViolation v = win_condition_worst_violator(complete_graph(1), 5, 0);
        REQUIRE(v.subset.empty());
        REQUIRE(v.slack == -1);  // c(G) - (b+2) = 1 - 2
    }
}

TEST_CASE("cut condition implies a bounded-excess tree (random sample)") {
    std::mt19937_64 rng(59);
    int implications_checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const Graph g = test_oracle::random_connected_graph(rng, n, 0.45);
        for (int k = 3; k <= 5; ++k)
            for (int b = 0; b <= 1; ++b)
                if (win_condition_holds(g, k, b)) {
                    REQUIRE(has_bounded_excess_tree(g, k, b));
                    ++implications_checked;
                }
    }
    REQUIRE(implications_checked > 100);
}
