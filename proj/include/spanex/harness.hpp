#pragma once

#include <chrono>
#include <cmath>
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "spanex/excess.hpp"
#include "spanex/extremal.hpp"
#include "spanex/family_polys.hpp"
#include "spanex/graph6.hpp"
#include "spanex/isomorphism.hpp"
#include "spanex/quotient.hpp"
#include "spanex/spectral.hpp"

namespace spanex {

using nlohmann::json;

inline constexpr int kExhaustiveMaxOrder = 7;
inline constexpr double kDefaultFilterTol = 1e-9;

enum class RunMode { exhaustive_labeled, graph6_stream, random_sample };

inline const char* to_string(RunMode m) {
    switch (m) {
        case RunMode::exhaustive_labeled: return "exhaustive-labeled";
        case RunMode::graph6_stream: return "graph6-stream";
        case RunMode::random_sample: return "random-sample";
    }
    return "?";
}

inline RunMode run_mode_from_string(const std::string& s) {
    if (s == "exhaustive-labeled" || s == "exhaustive") return RunMode::exhaustive_labeled;
    if (s == "graph6-stream" || s == "stream") return RunMode::graph6_stream;
    if (s == "random-sample" || s == "sample") return RunMode::random_sample;
    throw std::invalid_argument("unknown run mode: " + s);
}

struct RunConfig {
    int n = 7;
    int k = 5;
    int b = 0;
    RunMode mode = RunMode::exhaustive_labeled;
    double tolerance = kDefaultFilterTol;
    int workers = 1;
    bool filter_enabled = true;  // off: control run deciding every graph
    std::uint64_t seed = 1;      // random-sample mode
    int sample_count = 1000;     // random-sample mode
    double edge_prob = 0.5;      // random-sample mode
    bool timing = false;         // include a timing block in the report

    // Theorem hypotheses plus desk-scale limits.
    void validate() const {
        if (workers < 1) throw std::invalid_argument("workers must be >= 1");
        if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
        if (k < std::max(5, b + 3) || (b == 2 && k == 5))
            throw std::invalid_argument(
                "theorem context requires k >= max(5, b+3) and (b,k) != (2,5)");
        if (n < k + b + 2) throw std::invalid_argument("theorem context requires n >= k+b+2");
        if (n > kExactSearchMaxOrder)
            throw ScopeError("theorem sweeps need the exact excess decision (n <= 12)");
        if (mode == RunMode::exhaustive_labeled && n > kExhaustiveMaxOrder)
            throw ScopeError("exhaustive-labeled mode limited to n <= 7");
        if (mode == RunMode::random_sample) {
            if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
            if (!(edge_prob > 0.0 && edge_prob <= 1.0))
                throw std::invalid_argument("edge_prob must lie in (0, 1]");
        }
    }

    json to_json() const {
        json j{{"n", n},
               {"k", k},
               {"b", b},
               {"mode", to_string(mode)},
               {"tolerance", tolerance},
               {"workers", workers},
               {"filter_enabled", filter_enabled}};
        if (mode == RunMode::random_sample) {
            j["seed"] = seed;
            j["sample_count"] = sample_count;
            j["edge_prob"] = edge_prob;
        }
        return j;
    }
};

// One graph's verdict in a theorem run.
struct VerificationRecord {
    std::string graph6;
    double rho = 0.0;
    double threshold = 0.0;
    bool passes_filter = false;
    bool has_bounded_tree = false;
    bool is_exception = false;  // passes filter and fails the excess decision
    bool iso_gstar = false;
    std::optional<double> rho1;  // family-graph root, when applicable

    json to_json() const {
        json j{{"graph6", graph6},
               {"rho", rho},
               {"threshold", threshold},
               {"passes_filter", passes_filter},
               {"has_bounded_tree", has_bounded_tree},
               {"is_exception", is_exception},
               {"iso_gstar", iso_gstar}};
        j["rho1"] = rho1 ? json(*rho1) : json(nullptr);
        return j;
    }
};

struct TheoremReport {
    RunConfig config;
    std::string gstar_graph6;
    double threshold = 0.0;
    long long graphs_scanned = 0;
    long long connected = 0;
    long long filter_survivors = 0;
    long long excess_failures = 0;  // decided graphs without a bounded tree
    long long exceptions = 0;       // excess failures that pass the filter
    long long counterexamples = 0;  // exceptions not isomorphic to gstar
    long long discarded_disconnected = 0;  // random-sample mode
    std::vector<VerificationRecord> failure_records;
    // spectral gap data: largest rho among excess failures not iso to gstar
    std::optional<double> best_non_gstar_failure_rho;
    double elapsed_seconds = 0.0;

    bool theorem_verified() const { return counterexamples == 0; }

    json to_json() const {
        json j;
        j["schema_version"] = 1;
        j["config"] = config.to_json();
        j["threshold"] = {{"graph6", gstar_graph6}, {"rho", threshold}};
        j["counts"] = {{"graphs_scanned", graphs_scanned},
                       {"connected", connected},
                       {"filter_survivors", filter_survivors},
                       {"excess_failures", excess_failures},
                       {"exceptions", exceptions},
                       {"counterexamples", counterexamples}};
        if (config.mode == RunMode::random_sample)
            j["counts"]["discarded_disconnected"] = discarded_disconnected;
        j["exceptions"] = json::array();
        for (const auto& r : failure_records) j["exceptions"].push_back(r.to_json());
        j["margins"] = json::object();
        j["margins"]["threshold_gap"] =
            best_non_gstar_failure_rho ? json(threshold - *best_non_gstar_failure_rho)
                                       : json(nullptr);
        j["verified"] = theorem_verified();
        if (config.timing) j["timing"] = {{"elapsed_seconds", elapsed_seconds}};
        return j;
    }
};

namespace detail {

// Graph from an edge-subset bitmask; bit t encodes pair t in lexicographic
// (u,v) order, u < v.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int t = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++t)
            if ((mask >> t) & 1u) g.add_edge(u, v);
    return g;
}

// Deterministic cross-platform Bernoulli draw.
inline bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p)) g.add_edge(u, v);
    return g;
}

struct WorkerPartial {
    long long connected = 0;
    long long filter_survivors = 0;
    long long excess_failures = 0;
    long long exceptions = 0;
    long long counterexamples = 0;
    std::vector<std::pair<long long, VerificationRecord>> indexed_records;
    std::optional<double> best_non_gstar_failure_rho;
    std::exception_ptr error;
};

}  // namespace detail

// Theorem verification sweep. Streams connected graphs of order n, applies
// the spectral filter rho(G) >= rho(gstar) - tol, runs the bounded-excess
// decision on survivors (or on everything when the filter is disabled),
// classifies failures by isomorphism with gstar, and aggregates counts.
// Workers partition the stream; partial results merge in stream order, so
// the report is byte-identical for any worker count.
inline TheoremReport verify_theorem(const RunConfig& cfg, std::istream* stream = nullptr) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    TheoremReport rep;
    rep.config = cfg;
    const Graph gstar = build_gstar(cfg.n, cfg.k, cfg.b);
    rep.gstar_graph6 = emit_graph6(gstar);
    rep.threshold = spectral_radius(gstar);

    // materialize the stream of candidate graphs (desk scale throughout)
    std::vector<Graph> graphs;
    if (cfg.mode == RunMode::exhaustive_labeled) {
        const int pairs = cfg.n * (cfg.n - 1) / 2;
        rep.graphs_scanned = 1LL << pairs;
    } else if (cfg.mode == RunMode::graph6_stream) {
        if (stream == nullptr) throw std::invalid_argument("graph6-stream mode needs an input stream");
        std::string line;
        while (std::getline(*stream, line)) {
            if (line.empty()) continue;
            Graph g = parse_graph6(line);
            if (g.order() != cfg.n)
                throw std::invalid_argument("stream graph order " + std::to_string(g.order()) +
                                            " does not match configured n");
            graphs.push_back(std::move(g));
        }
        rep.graphs_scanned = static_cast<long long>(graphs.size());
    } else {
        std::mt19937_64 rng(cfg.seed);
        long long discarded = 0;
        const long long draw_cap = 10000LL * cfg.sample_count;
        while (static_cast<int>(graphs.size()) < cfg.sample_count) {
            if (discarded + static_cast<long long>(graphs.size()) >= draw_cap)
                throw std::runtime_error("random sampling rejected too many disconnected draws");
            Graph g = detail::random_graph(rng, cfg.n, cfg.edge_prob);
            if (is_connected(g)) graphs.push_back(std::move(g));
            else ++discarded;
        }
        rep.graphs_scanned = cfg.sample_count + discarded;
        rep.discarded_disconnected = discarded;
    }

    const auto process = [&](long long index, const Graph& g, detail::WorkerPartial& part) {
        if (!is_connected(g)) return;
        ++part.connected;
        const double rho = spectral_radius(g);
        const bool passes = rho >= rep.threshold - cfg.tolerance;
        if (passes) ++part.filter_survivors;
        if (cfg.filter_enabled && !passes) return;
        if (has_bounded_excess_tree(g, cfg.k, cfg.b)) return;
        ++part.excess_failures;
        VerificationRecord rec;
        rec.graph6 = emit_graph6(g);
        rec.rho = rho;
        rec.threshold = rep.threshold;
        rec.passes_filter = passes;
        rec.has_bounded_tree = false;
        rec.is_exception = passes;
        rec.iso_gstar = is_isomorphic(g, gstar);
        if (rec.iso_gstar)
            rec.rho1 = largest_real_root(
                gstar_quotient_poly().instantiate(cfg.n, 1, cfg.k, cfg.b),
                static_cast<double>(cfg.n));
        if (rec.is_exception) {
            ++part.exceptions;
            if (!rec.iso_gstar) ++part.counterexamples;
        }
        if (!rec.iso_gstar) {
            if (!part.best_non_gstar_failure_rho || rho > *part.best_non_gstar_failure_rho)
                part.best_non_gstar_failure_rho = rho;
        }
        part.indexed_records.emplace_back(index, std::move(rec));
    };

    // strided worker assignment balances the dense (expensive) graphs; the
    // record merge below restores stream order, so reports stay byte-identical
    // for every worker count
    const int workers = std::max(1, cfg.workers);
    std::vector<detail::WorkerPartial> partials(static_cast<std::size_t>(workers));
    const long long total = cfg.mode == RunMode::exhaustive_labeled
                                ? rep.graphs_scanned
                                : static_cast<long long>(graphs.size());
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                auto& part = partials[static_cast<std::size_t>(w)];
                try {
                    for (long long i = w; i < total; i += workers) {
                        if (cfg.mode == RunMode::exhaustive_labeled)
                            process(i,
                                    detail::graph_from_mask(cfg.n, static_cast<std::uint64_t>(i)),
                                    part);
                        else
                            process(i, graphs[static_cast<std::size_t>(i)], part);
                    }
                } catch (...) {
                    part.error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& part : partials)
            if (part.error) std::rethrow_exception(part.error);
    }

    std::vector<std::pair<long long, VerificationRecord>> merged;
    for (auto& part : partials) {
        rep.connected += part.connected;
        rep.filter_survivors += part.filter_survivors;
        rep.excess_failures += part.excess_failures;
        rep.exceptions += part.exceptions;
        rep.counterexamples += part.counterexamples;
        for (auto& r : part.indexed_records) merged.push_back(std::move(r));
        if (part.best_non_gstar_failure_rho &&
            (!rep.best_non_gstar_failure_rho ||
             *part.best_non_gstar_failure_rho > *rep.best_non_gstar_failure_rho))
            rep.best_non_gstar_failure_rho = part.best_non_gstar_failure_rho;
    }
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, rec] : merged) rep.failure_records.push_back(std::move(rec));

    // re-check record invariants before the report leaves the harness
    long long exception_records = 0;
    for (const auto& r : rep.failure_records) {
        if (r.is_exception != (r.passes_filter && !r.has_bounded_tree))
            throw std::logic_error("inconsistent verification record: " + r.graph6);
        if (r.is_exception) ++exception_records;
    }
    if (exception_records != rep.exceptions)
        throw std::logic_error("exception count does not match the exception records");

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Lemma property suites
// ---------------------------------------------------------------------------

struct CutImplicationResult {  // cut condition implies a bounded-excess tree
    long long graphs_checked = 0;
    long long cut_condition_holds = 0;
    long long implication_failures = 0;
    std::vector<std::string> failures;  // graph6 of any violator

    json to_json() const {
        return {{"graphs_checked", graphs_checked},
                {"cut_condition_holds", cut_condition_holds},
                {"implication_failures", implication_failures},
                {"failures", failures}};
    }
};

// Exhaustive over all connected labeled graphs of order n (n <= 7).
inline CutImplicationResult cut_implication_exhaustive(int n, int k, int b) {
    if (n > kExhaustiveMaxOrder) throw ScopeError("exhaustive scan limited to n <= 7");
    CutImplicationResult res;
    const long long total = 1LL << (n * (n - 1) / 2);
    for (long long mask = 0; mask < total; ++mask) {
        const Graph g = detail::graph_from_mask(n, static_cast<std::uint64_t>(mask));
        if (!is_connected(g)) continue;
        ++res.graphs_checked;
        if (!win_condition_holds(g, k, b)) continue;
        ++res.cut_condition_holds;
        if (!has_bounded_excess_tree(g, k, b)) {
            ++res.implication_failures;
            res.failures.push_back(emit_graph6(g));
        }
    }
    return res;
}

inline CutImplicationResult cut_implication_random(int max_n, const std::vector<int>& ks,
                                    const std::vector<int>& bs, int samples, std::uint64_t seed) {
    CutImplicationResult res;
    std::mt19937_64 rng(seed);
    int produced = 0;
    while (produced < samples) {
        const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 3));
        const double p = 0.3 + 0.2 * static_cast<double>(rng() % 3);
        const Graph g = detail::random_graph(rng, n, p);
        if (!is_connected(g)) continue;
        ++produced;
        for (int k : ks)
            for (int b : bs) {
                ++res.graphs_checked;
                if (!win_condition_holds(g, k, b)) continue;
                ++res.cut_condition_holds;
                if (!has_bounded_excess_tree(g, k, b)) {
                    ++res.implication_failures;
                    res.failures.push_back(emit_graph6(g));
                }
            }
    }
    return res;
}

struct MonotonicityResult {  // spectral monotonicity under edge deletion
    long long pairs_checked = 0;
    long long applicable = 0;  // deletion kept the graph connected
    double min_margin = std::numeric_limits<double>::infinity();
    long long failures = 0;

    json to_json() const {
        return {{"pairs_checked", pairs_checked},
                {"applicable", applicable},
                {"min_margin", applicable ? json(min_margin) : json(nullptr)},
                {"failures", failures}};
    }
};

inline MonotonicityResult monotonicity_random(int max_n, int pairs, std::uint64_t seed,
                                    double strict_margin = 1e-9) {
    MonotonicityResult res;
    std::mt19937_64 rng(seed);
    while (res.pairs_checked < pairs) {
        const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 2));
        const double p = 0.3 + 0.2 * static_cast<double>(rng() % 3);
        Graph g = detail::random_graph(rng, n, p);
        if (!is_connected(g)) continue;
        const auto edges = g.edges();
        const auto [u, v] = edges[rng() % edges.size()];
        ++res.pairs_checked;
        const double rho_g = spectral_radius(g);
        g.remove_edge(u, v);
        const Spectrum sub = adjacency_spectrum(g);  // H may be disconnected
        const double rho_h = sub.eigenvalues.front();
        if (rho_h > rho_g + 1e-12) ++res.failures;  // weak direction always holds
        if (is_connected(g)) {
            ++res.applicable;
            const double margin = rho_g - rho_h;
            res.min_margin = std::min(res.min_margin, margin);
            if (margin <= strict_margin) ++res.failures;
        }
    }
    return res;
}

struct CliqueMergeResult {  // clique-merging strict inequality
    long long instances = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    long long failures = 0;

    json to_json() const {
        return {{"instances", instances},
                {"min_margin", instances ? json(min_margin) : json(nullptr)},
                {"failures", failures}};
    }
};

// K_s v (K_{n1} u ... u K_{nt}) for a given part profile.
inline Graph join_of_cliques(int s, const std::vector<int>& parts) {
    Graph blocks(0);
    for (int p : parts) blocks = disjoint_union(blocks, complete_graph(p));
    return join(complete_graph(s), blocks);
}

inline CliqueMergeResult clique_merge_profiles(const std::vector<int>& s_values,
                                      const std::vector<int>& t_values, int max_n,
                                      double strict_margin = 1e-9) {
    CliqueMergeResult res;
    for (int s : s_values)
        for (int t : t_values)
            for (int n = s + t; n <= max_n; ++n) {
                // descending part profiles n1 >= ... >= nt >= 1 with sum n-s
                std::vector<int> parts(static_cast<std::size_t>(t), 1);
                const int total = n - s;
                auto rec = [&](auto&& self, int i, int remaining, int cap) -> void {
                    if (i == t - 1) {
                        if (remaining > cap || remaining < 1) return;
                        parts[static_cast<std::size_t>(i)] = remaining;
                        const int n1 = parts[0];
                        if (n1 >= n - s - t + 1) return;  // lemma hypothesis n1 < n-s-t+1
                        std::vector<int> merged{n - s - t + 1};
                        for (int j = 1; j < t; ++j) merged.push_back(1);
                        const double lhs = spectral_radius(join_of_cliques(s, parts));
                        const double rhs = spectral_radius(join_of_cliques(s, merged));
                        ++res.instances;
                        const double margin = rhs - lhs;
                        res.min_margin = std::min(res.min_margin, margin);
                        if (margin <= strict_margin) ++res.failures;
                        return;
                    }
                    for (int v = std::min(cap, remaining - (t - 1 - i)); v >= 1; --v) {
                        parts[static_cast<std::size_t>(i)] = v;
                        self(self, i + 1, remaining - v, v);
                    }
                };
                rec(rec, 0, total, total);
            }
    return res;
}

struct QuotientAgreementResult {  // quotient spectral radius agreement on family graphs
    long long family_graphs = 0;
    double max_abs_error = 0.0;
    long long failures = 0;

    json to_json() const {
        return {{"family_graphs", family_graphs},
                {"max_abs_error", max_abs_error},
                {"failures", failures}};
    }
};

inline QuotientAgreementResult quotient_agreement_family_grid(double tol = 1e-8) {
    QuotientAgreementResult res;
    const auto check = [&](const Graph& g, const Partition& p) {
        if (!is_equitable(g, p)) {
            ++res.failures;
            return;
        }
        const double via_quotient = largest_eigenvalue_of_quotient(quotient_matrix(g, p));
        const double via_graph = spectral_radius(g);
        const double err = std::abs(via_quotient - via_graph);
        res.max_abs_error = std::max(res.max_abs_error, err);
        ++res.family_graphs;
        if (err > tol) ++res.failures;
    };
    for (int k = 5; k <= 8; ++k)
        for (int b = 0; b <= k - 3; ++b) {
            if (b == 2 && k == 5) continue;
            for (int n = k + b + 2; n <= k + b + 8; ++n) check(build_gstar(n, k, b), gstar_partition(n, k, b));
            for (int s = 1; s <= 3; ++s) {
                const int n_min = (k - 1) * s + b + 3;
                for (int n = n_min; n <= n_min + 4; ++n)
                    check(build_b1_family(n, s, k, b), b1_family_partition(n, s, k, b));
                check(build_star_family(s, k, b), star_family_partition(s, k, b));
            }
        }
    return res;
}

struct LemmaSuiteReport {
    CutImplicationResult cut_implication;
    MonotonicityResult monotonicity;
    CliqueMergeResult clique_merge;
    QuotientAgreementResult quotient_agreement;

    bool passed() const {
        return cut_implication.implication_failures == 0 && monotonicity.failures == 0 &&
               clique_merge.failures == 0 && quotient_agreement.failures == 0;
    }

    json to_json() const {
        return {{"schema_version", 1},
                {"cut_condition_implication", cut_implication.to_json()},
                {"subgraph_monotonicity", monotonicity.to_json()},
                {"clique_merging", clique_merge.to_json()},
                {"quotient_agreement", quotient_agreement.to_json()},
                {"passed", passed()}};
    }
};

struct LemmaSuiteConfig {
    int exhaustive_n = 7;  // 0 disables the exhaustive phase
    int exhaustive_k = 5;
    std::vector<int> exhaustive_bs = {0, 1};
    int random_samples = 100;
    int random_max_n = 10;
    std::uint64_t seed = 1;
    int monotonicity_pairs = 200;
    int monotonicity_max_n = 12;
};

inline LemmaSuiteReport verify_lemma_suite(const LemmaSuiteConfig& cfg) {
    LemmaSuiteReport rep;
    if (cfg.exhaustive_n > 0)
        for (int b : cfg.exhaustive_bs) {
            auto part = cut_implication_exhaustive(cfg.exhaustive_n, cfg.exhaustive_k, b);
            rep.cut_implication.graphs_checked += part.graphs_checked;
            rep.cut_implication.cut_condition_holds += part.cut_condition_holds;
            rep.cut_implication.implication_failures += part.implication_failures;
            for (auto& f : part.failures) rep.cut_implication.failures.push_back(std::move(f));
        }
    if (cfg.random_samples > 0) {
        auto part = cut_implication_random(cfg.random_max_n, {3, 4, 5}, {0, 1, 2}, cfg.random_samples,
                                   cfg.seed);
        rep.cut_implication.graphs_checked += part.graphs_checked;
        rep.cut_implication.cut_condition_holds += part.cut_condition_holds;
        rep.cut_implication.implication_failures += part.implication_failures;
        for (auto& f : part.failures) rep.cut_implication.failures.push_back(std::move(f));
    }
    rep.monotonicity = monotonicity_random(cfg.monotonicity_max_n, cfg.monotonicity_pairs, cfg.seed + 1);
    rep.clique_merge = clique_merge_profiles({1, 2}, {2, 3}, 10);
    rep.quotient_agreement = quotient_agreement_family_grid();
    return rep;
}

}  // namespace spanex
