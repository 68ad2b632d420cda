// Command-line front end for the spanex toolkit.
//
// Exit codes: 0 success/verified, 2 usage or input error, 3 counterexample
// or failed check, 4 desk-scale scope exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spanex/spanex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitScope = 4;

std::vector<std::string> gather_graph_lines(const std::string& arg) {
    std::vector<std::string> lines;
    if (arg == "-") {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) lines.push_back(line);
    } else {
        lines.push_back(arg);
    }
    return lines;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

void emit(std::ostream& out, const spanex::json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for bounded-excess spanning trees and spectral thresholds"};
    app.require_subcommand(1);

    std::string graph_arg, out_path, family = "gstar", mode_str = "exhaustive-labeled";
    int n = 7, s = 1, k = 5, b = 0;
    int workers = 1, sample_count = 1000, restarts = 0;
    double tolerance = spanex::kDefaultFilterTol, edge_prob = 0.5;
    std::uint64_t seed = 1;
    bool include_empty = false, as_json = false, no_filter = false, timing = false;
    spanex::F1Grid grid;

    auto* sp = app.add_subcommand("spectral-radius", "adjacency spectral radius of graph6 input");
    sp->add_option("graph", graph_arg, "graph6 string or - for stdin lines")->required();
    sp->add_flag("--json", as_json, "emit a JSON record per graph");
    sp->add_option("--out", out_path, "write to file instead of stdout");

    auto* me = app.add_subcommand("min-excess", "minimum total k-excess over spanning trees");
    me->add_option("graph", graph_arg, "graph6 string or - for stdin lines")->required();
    me->add_option("--k", k, "degree bound k")->required();
    me->add_option("--restarts", restarts, "use the swap heuristic with this many restarts");
    me->add_flag("--json", as_json, "emit a JSON record per graph");
    me->add_option("--out", out_path, "write to file instead of stdout");

    auto* wc = app.add_subcommand("win-check", "worst subset for the cut condition");
    wc->add_option("graph", graph_arg, "graph6 string or - for stdin lines")->required();
    wc->add_option("--k", k, "degree bound k")->required();
    wc->add_option("--b", b, "excess budget b")->required();
    wc->add_flag("--include-empty", include_empty, "scan the empty subset too");
    wc->add_option("--out", out_path, "write to file instead of stdout");

    auto* be = app.add_subcommand("build-extremal", "construct a family graph, emit graph6");
    be->add_option("--family", family, "gstar | b1 | star")->required();
    be->add_option("--n", n, "order (gstar, b1)");
    be->add_option("--s", s, "join-clique size (b1, star)");
    be->add_option("--k", k, "degree bound k")->required();
    be->add_option("--b", b, "excess budget b")->required();
    be->add_option("--out", out_path, "write to file instead of stdout");

    auto* vi = app.add_subcommand("verify-identities",
                                  "exact identity checks on the quotient polynomials");

    auto* cf = app.add_subcommand("check-f1", "sign scan of f1 at the family root, CSV output");
    cf->add_option("--s-min", grid.s_min);
    cf->add_option("--s-max", grid.s_max);
    cf->add_option("--k-min", grid.k_min);
    cf->add_option("--k-max", grid.k_max);
    cf->add_option("--b-min", grid.b_min);
    cf->add_option("--b-max", grid.b_max, "-1 means up to k-3");
    cf->add_option("--n-offsets", grid.n_offsets, "offsets added to the minimum order (k-1)s+b+3");
    cf->add_option("--out", out_path, "write CSV to file instead of stdout");

    auto* vt = app.add_subcommand("verify-theorem", "spectral threshold sweep over a graph corpus");
    vt->add_option("--n", n, "graph order")->required();
    vt->add_option("--k", k, "degree bound k")->required();
    vt->add_option("--b", b, "excess budget b")->required();
    vt->add_option("--mode", mode_str, "exhaustive-labeled | graph6-stream | random-sample");
    vt->add_option("--workers", workers, "parallel workers");
    vt->add_option("--tolerance", tolerance, "spectral filter tolerance");
    vt->add_option("--seed", seed, "random-sample seed");
    vt->add_option("--samples", sample_count, "random-sample count");
    vt->add_option("--edge-prob", edge_prob, "random-sample edge probability");
    vt->add_flag("--no-filter", no_filter, "control run: decide every connected graph");
    vt->add_flag("--timing", timing, "include timing in the report");
    vt->add_option("--out", out_path, "write JSON report to file instead of stdout");

    auto* ls = app.add_subcommand("lemma-suite", "run the lemma property suites");
    int suite_exhaustive_n = 7, suite_samples = 100, suite_pairs = 200;
    ls->add_option("--exhaustive-n", suite_exhaustive_n, "0 disables the exhaustive phase");
    ls->add_option("--samples", suite_samples, "random graphs for the cut-condition suite");
    ls->add_option("--pairs", suite_pairs, "edge-deletion pairs for the monotonicity suite");
    ls->add_option("--seed", seed, "seed for the randomized phases");
    ls->add_option("--out", out_path, "write JSON report to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    std::ofstream file;
    try {
        std::ostream& out = open_output(out_path, file);

        if (sp->parsed()) {
            for (const auto& line : gather_graph_lines(graph_arg)) {
                const spanex::Graph g = spanex::parse_graph6(line);
                const double rho = spanex::spectral_radius(g);
                if (as_json)
                    emit(out, {{"graph6", line}, {"rho", rho}});
                else
                    out << std::setprecision(15) << rho << "\n";
            }
            return kExitOk;
        }

        if (me->parsed()) {
            for (const auto& line : gather_graph_lines(graph_arg)) {
                const spanex::Graph g = spanex::parse_graph6(line);
                const spanex::ExcessResult res =
                    restarts > 0 ? spanex::min_total_excess_heuristic(g, k, restarts)
                                 : spanex::min_total_excess_exact(g, k);
                if (as_json) {
                    spanex::json witness = spanex::json::array();
                    for (auto [u, v] : res.witness.edges) witness.push_back({u, v});
                    emit(out, {{"graph6", line},
                               {"k", k},
                               {"min_total_excess", res.value},
                               {"method", spanex::to_string(res.method)},
                               {"witness_edges", witness},
                               {"nodes_explored", res.nodes_explored}});
                } else {
                    out << res.value << "\n";
                }
            }
            return kExitOk;
        }

        if (wc->parsed()) {
            for (const auto& line : gather_graph_lines(graph_arg)) {
                const spanex::Graph g = spanex::parse_graph6(line);
                const spanex::WinViolation v =
                    spanex::win_condition_worst_violator(g, k, b, include_empty);
                emit(out, {{"graph6", line},
                           {"k", k},
                           {"b", b},
                           {"include_empty", include_empty},
                           {"max_slack", v.slack},
                           {"subset", v.subset.vertices()},
                           {"components", v.components},
                           {"bound", v.bound},
                           {"condition_holds", v.slack <= 0},
                           {"violator_convention", v.subset.empty() ? "empty" : "nonempty"}});
            }
            return kExitOk;
        }

        if (be->parsed()) {
            const spanex::Graph g = spanex::build_family(family, n, s, k, b);
            out << spanex::emit_graph6(g) << "\n";
            return kExitOk;
        }

        if (vi->parsed()) {
            const auto check = spanex::verify_quotient_poly_identity();
            const auto s1 = spanex::b1_quotient_poly().substitute(spanex::Var::s, 1);
            const bool s1_ok = s1 == spanex::gstar_quotient_poly();
            const auto b1_det = spanex::char_poly_3x3(spanex::b1_quotient_template());
            const auto gstar_det = spanex::char_poly_3x3(spanex::gstar_quotient_template());
            const auto star_det = spanex::char_poly_2x2(spanex::star_quotient_template());
            const bool det_ok = b1_det == spanex::b1_quotient_poly() &&
                                gstar_det == spanex::gstar_quotient_poly() &&
                                star_det == spanex::star_quotient_poly();
            out << "quotient-poly identity (gstar - b1 == (s-1)*f1): "
                << (check.ok ? "OK" : "FAIL") << "\n";
            out << "b1 polynomial at s=1 equals gstar polynomial: " << (s1_ok ? "OK" : "FAIL")
                << "\n";
            out << "polynomial templates match symbolic determinants: " << (det_ok ? "OK" : "FAIL")
                << "\n";
            if (!check.ok) out << "residue: " << check.residue.to_string() << "\n";
            return (check.ok && s1_ok && det_ok) ? kExitOk : kExitCounterexample;
        }

        if (cf->parsed()) {
            const spanex::F1Report rep = spanex::check_f1_negativity(grid);
            out << "s,k,b,n,rho1,f1_value,sign\n";
            out << std::setprecision(15);
            for (const auto& row : rep.rows) {
                out << row.s << "," << row.k << "," << row.b << "," << row.n << ",";
                if (row.skipped)
                    out << ",,skipped\n";
                else
                    out << row.rho1 << "," << row.f1_value << ","
                        << (row.f1_value < 0 ? "negative" : "nonnegative") << "\n";
            }
            std::cerr << "evaluated " << rep.evaluated << " points, skipped " << rep.skipped
                      << ", max f1 value " << rep.max_value << "\n";
            return rep.all_negative() ? kExitOk : kExitCounterexample;
        }

        if (vt->parsed()) {
            spanex::RunConfig cfg;
            cfg.n = n;
            cfg.k = k;
            cfg.b = b;
            cfg.mode = spanex::run_mode_from_string(mode_str);
            cfg.tolerance = tolerance;
            cfg.workers = workers;
            cfg.filter_enabled = !no_filter;
            cfg.seed = seed;
            cfg.sample_count = sample_count;
            cfg.edge_prob = edge_prob;
            cfg.timing = timing;
            const spanex::TheoremReport rep = spanex::verify_theorem(cfg, &std::cin);
            emit(out, rep.to_json());
            if (!rep.theorem_verified()) {
                std::cerr << "counterexample found\n";
                return kExitCounterexample;
            }
            return kExitOk;
        }

        if (ls->parsed()) {
            spanex::LemmaSuiteConfig cfg;
            cfg.exhaustive_n = suite_exhaustive_n;
            cfg.random_samples = suite_samples;
            cfg.monotonicity_pairs = suite_pairs;
            cfg.seed = seed;
            const spanex::LemmaSuiteReport rep = spanex::verify_lemma_suite(cfg);
            emit(out, rep.to_json());
            return rep.passed() ? kExitOk : kExitCounterexample;
        }
    } catch (const spanex::ScopeError& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return kExitScope;
    } catch (const spanex::Graph6ParseError& e) {
        std::cerr << "graph6 parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
