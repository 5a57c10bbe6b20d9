// Command-line front end for the exact graph laboratory: generators,
// edge-clique transforms, exact solvers, verification suites, and the
// study tables. Exit codes: 0 success / suite passed, 1 suite failed,
// 2 usage or input error, 3 resource guard tripped.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eclab/cograph.hpp"
#include "eclab/dimacs.hpp"
#include "eclab/harness.hpp"

namespace {

using nlohmann::json;
using namespace eclab;

json vertex_set_json(const VertexSet& s) {
    json arr = json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << doc.dump(2) << '\n';
}

void emit_graph(const Graph& g, const std::string& path) {
    if (path.empty() || path == "-")
        write_dimacs(std::cout, g);
    else
        write_dimacs_file(path, g);
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
    std::string family;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string output;
};

int run_generate(const GenerateArgs& args) {
    Graph g(0);
    if (args.family == "cp")
        g = make_cocktail_party(args.n);
    else if (args.family == "complete")
        g = make_complete(args.n);
    else if (args.family == "cycle")
        g = make_cycle(args.n);
    else if (args.family == "path")
        g = make_path(args.n);
    else if (args.family == "matching")
        g = make_matching(args.n);
    else if (args.family == "random")
        g = random_graph(args.n, args.p, args.seed);
    else if (args.family == "cograph")
        g = cograph_from_cotree(random_cotree(args.n, args.seed));
    else
        throw CLI::ValidationError("unknown family: " + args.family);
    emit_graph(g, args.output);
    return 0;
}

// --- transform ke -----------------------------------------------------------

struct TransformArgs {
    std::string input;
    std::string output;
    std::string catalog;
    int iterate = 1;
    int budget = kDefaultIterateBudget;
};

int run_transform(const TransformArgs& args) {
    const Graph g = read_dimacs_file(args.input);
    const EdgeCliqueChain chain = iterated_edge_clique(g, args.iterate, args.budget);
    emit_graph(chain.final, args.output);
    if (!args.catalog.empty()) {
        std::ofstream out(args.catalog);
        if (!out) throw std::runtime_error("cannot write catalog: " + args.catalog);
        // Each output vertex i came from edge (u, v) of the graph fed
        // into the last application (the input itself when --iterate 1).
        if (!chain.steps.empty()) {
            const EdgeCatalog& catalog = chain.steps.back().catalog;
            for (std::size_t i = 0; i < catalog.edges.size(); ++i)
                out << i << ' ' << catalog.edges[i].u << ' ' << catalog.edges[i].v
                    << '\n';
        }
    }
    return 0;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
    std::string problem;
    std::string input;
    std::string certificate;
    double time_limit = 0.0;  // 0 = none
    // rankwidth options
    bool linear = false;
    bool greedy = false;
    int max_n = -1;
    std::uint64_t seed = 0;
    int restarts = 8;
};

void print_report(const std::string& problem, const Graph& g,
                  const SolveReport& report) {
    std::cout << "problem: " << problem << '\n'
              << "n: " << g.vertex_count() << '\n'
              << "m: " << g.edge_count() << '\n'
              << "objective: " << report.objective << '\n'
              << "status: " << (report.optimal ? "optimal" : "timeout") << '\n'
              << "nodes: " << report.nodes_explored << '\n'
              << "wall_time_s: " << report.wall_time_s << '\n';
}

json report_json(const std::string& problem, const Graph& g,
                 const SolveReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["problem"] = problem;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["objective"] = report.objective;
    doc["optimal"] = report.optimal;
    doc["lower_bound"] = report.lower_bound_used;
    doc["nodes"] = report.nodes_explored;
    doc["wall_time_s"] = report.wall_time_s;
    return doc;
}

int run_solve_rankwidth(const SolveArgs& args) {
    const Graph g = read_dimacs_file(args.input);
    json doc;
    doc["schema"] = 1;
    doc["problem"] = "rankwidth";
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    if (args.linear) {
        const LinearRankwidthResult r =
            args.max_n > 0 ? linear_rankwidth(g, args.max_n) : linear_rankwidth(g);
        std::cout << "problem: rankwidth\nmode: linear\nwidth: " << r.width
                  << "\nwall_time_s: " << r.wall_time_s << '\n';
        doc["mode"] = "linear";
        doc["width"] = r.width;
        doc["exact"] = true;
        doc["order"] = r.order;
        doc["wall_time_s"] = r.wall_time_s;
    } else {
        RankwidthResult r;
        const char* mode = "exact";
        if (args.greedy) {
            mode = "greedy";
            r = greedy_rankwidth_upper_bound(g, args.seed, args.restarts);
        } else {
            r = args.max_n > 0 ? exact_rankwidth(g, args.max_n) : exact_rankwidth(g);
        }
        const DecompositionCheck check = verify_branch_decomposition(g, r.decomposition);
        std::cout << "problem: rankwidth\nmode: " << mode << "\nwidth: " << r.width
                  << "\ncertified_width: " << check.width
                  << "\nwall_time_s: " << r.wall_time_s << '\n';
        doc["mode"] = mode;
        doc["width"] = r.width;
        doc["exact"] = !args.greedy;
        doc["wall_time_s"] = r.wall_time_s;
        json dec;
        dec["node_count"] = r.decomposition.node_count;
        dec["leaf_vertex"] = r.decomposition.leaf_vertex;
        json edges = json::array();
        for (const auto& [a, b] : r.decomposition.edges)
            edges.push_back(json::array({a, b}));
        dec["edges"] = edges;
        dec["certified_width"] = check.width;
        doc["decomposition"] = dec;
        if (!check.matches_claimed) throw std::runtime_error("decomposition width mismatch");
    }
    if (!args.certificate.empty()) write_json_file(args.certificate, doc);
    return 0;
}

int run_solve(const SolveArgs& args) {
    if (args.problem == "rankwidth") return run_solve_rankwidth(args);

    const Graph g = read_dimacs_file(args.input);
    Deadline deadline;
    if (args.time_limit > 0) deadline = deadline_after(args.time_limit);

    SolveReport report;
    json doc;
    if (args.problem == "alpha") {
        report = max_independent_set(g, deadline);
        doc = report_json("alpha", g, report);
        doc["witness"] = vertex_set_json(report.witness());
    } else if (args.problem == "chi") {
        report = chromatic_number(g, deadline);
        doc = report_json("chi", g, report);
        doc["coloring"] = report.coloring();
    } else if (args.problem == "kappa") {
        report = vertex_clique_cover(g, deadline);
        doc = report_json("kappa", g, report);
        json parts = json::array();
        for (const VertexSet& part : report.cover().parts)
            parts.push_back(vertex_set_json(part));
        doc["parts"] = parts;
    } else if (args.problem == "theta-e") {
        report = edge_clique_cover(g, deadline);
        doc = report_json("theta-e", g, report);
        json parts = json::array();
        for (const VertexSet& part : report.cover().parts)
            parts.push_back(vertex_set_json(part));
        doc["cover"] = parts;
        const GyarfasBound gb = gyarfas_lower_bound(g);
        doc["log_lower_bound_applicable"] = gb.applicable;
        if (gb.applicable) doc["log_lower_bound"] = gb.value;
    } else {
        throw CLI::ValidationError("unknown problem: " + args.problem);
    }
    print_report(args.problem, g, report);
    if (!args.certificate.empty()) write_json_file(args.certificate, doc);
    return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::string n_spec;
    std::string corpus = "small";
    std::string format = "tsv";
    std::string json_out;
    int shearer_r = 2;
};

// "--n 5" selects a single size, "--n 2..8" an inclusive range.
std::pair<int, int> parse_n_range(const std::string& spec, int lo, int hi) {
    if (spec.empty()) return {lo, hi};
    try {
        const auto dots = spec.find("..");
        if (dots == std::string::npos) {
            const int v = std::stoi(spec);
            return {v, v};
        }
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n expects K or LO..HI, got: " + spec);
    }
}

int run_verify(const VerifyArgs& args) {
    SuiteResult result;
    if (args.suite == "lemma-alpha") {
        const auto [lo, hi] = parse_n_range(args.n_spec, 2, 8);
        result = suite_lemma_alpha(lo, hi);
    } else if (args.suite == "gyarfas")
        result = suite_gyarfas();
    else if (args.suite == "correspondence")
        result = suite_correspondence();
    else if (args.suite == "theta-kappa")
        result = suite_theta_kappa();
    else if (args.suite == "complement-gap")
        result = suite_complement_gap();
    else if (args.suite == "shearer")
        result = suite_shearer(parse_n_range(args.n_spec, 3, 3).first,
                               args.shearer_r);
    else
        throw CLI::ValidationError("unknown suite: " + args.suite);

    json doc;
    doc["schema"] = 1;
    doc["suite"] = result.name;
    doc["all_pass"] = result.all_pass;
    doc["wall_time_s"] = result.wall_time_s;
    json cases = json::array();
    for (const SuiteCase& c : result.cases)
        cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["cases"] = cases;

    if (args.format == "json") {
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const SuiteCase& c : result.cases)
            std::cout << (c.pass ? "pass" : "FAIL") << '\t' << c.name << '\t'
                      << c.detail << '\n';
        std::cout << "suite " << result.name << ": "
                  << (result.all_pass ? "PASS" : "FAIL") << " ("
                  << result.wall_time_s << "s)\n";
    }
    if (!args.json_out.empty()) write_json_file(args.json_out, doc);
    return result.all_pass ? 0 : 1;
}

// --- tables -----------------------------------------------------------------

struct GrowthArgs {
    int n_lo = 2;
    int n_hi = 6;
    std::uint64_t seed = 0;
    std::string format = "tsv";
    std::string out;
};

int run_growth(const GrowthArgs& args) {
    const std::vector<GrowthRow> rows = growth_table(args.n_lo, args.n_hi, args.seed);
    const auto emit = [&](std::ostream& out) {
        if (args.format == "json") {
            json doc;
            doc["schema"] = 1;
            doc["table"] = "growth";
            json jrows = json::array();
            for (const GrowthRow& r : rows)
                jrows.push_back({{"n", r.n},
                                 {"theta_e", r.theta_e},
                                 {"log2_lb", r.log_lb},
                                 {"ratio", r.ratio},
                                 {"rw_ke", r.rw_ke},
                                 {"rw_kind", r.rw_exact ? "exact" : "upper-bound"}});
            doc["rows"] = jrows;
            out << doc.dump(2) << '\n';
        } else {
            write_growth_tsv(out, rows);
        }
    };
    if (args.out.empty() || args.out == "-") {
        emit(std::cout);
    } else {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot write file: " + args.out);
        emit(out);
    }
    return 0;
}

struct SweepArgs {
    int max_n = 8;
    int samples = 50;
    std::uint64_t seed = 0;
    double time_limit = 0.0;
    std::string format = "tsv";
    std::string out;
};

int run_sweep(const SweepArgs& args) {
    std::optional<double> limit;
    if (args.time_limit > 0) limit = args.time_limit;
    const std::vector<SweepRow> rows =
        conjecture_sweep(args.max_n, args.samples, args.seed, limit);
    const auto emit = [&](std::ostream& out) {
        if (args.format == "json") {
            json doc;
            doc["schema"] = 1;
            doc["table"] = "cograph-sweep";
            json jrows = json::array();
            for (const SweepRow& r : rows) {
                json row = {{"id", r.id},
                            {"n", r.n},
                            {"m", r.m},
                            {"theta_e", r.theta_e},
                            {"alpha_ke", r.alpha_ke},
                            {"max_cliques", r.max_cliques},
                            {"status", r.timed_out ? "timeout" : "ok"}};
                if (r.gyarfas_applicable)
                    row["gyarfas_lb"] = r.gyarfas_lb;
                else
                    row["gyarfas_lb"] = nullptr;
                jrows.push_back(row);
            }
            doc["rows"] = jrows;
            out << doc.dump(2) << '\n';
        } else {
            write_sweep_tsv(out, rows);
        }
    };
    if (args.out.empty() || args.out == "-") {
        emit(std::cout);
    } else {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot write file: " + args.out);
        emit(out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for edge-clique covers, edge-clique graphs, "
                 "and rankwidth"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "write a graph in DIMACS form");
    generate->add_option("family", gen.family,
                         "cp|complete|cycle|path|matching|random|cograph")
        ->required();
    generate->add_option("n", gen.n, "size parameter")->required();
    generate->add_option("p", gen.p, "edge probability (random family)");
    generate->add_option("--seed", gen.seed, "rng seed");
    generate->add_option("--output,-o", gen.output, "output path (default stdout)");

    TransformArgs tr;
    CLI::App* transform = app.add_subcommand("transform", "graph transforms");
    CLI::App* ke = transform->add_subcommand("ke", "edge-clique graph");
    ke->add_option("--input,-i", tr.input, "input graph")->required();
    ke->add_option("--iterate,-r", tr.iterate, "number of applications")
        ->check(CLI::NonNegativeNumber);
    ke->add_option("--output,-o", tr.output, "output path (default stdout)");
    ke->add_option("--catalog", tr.catalog, "vertex catalog path: lines 'i u v'");
    ke->add_option("--budget", tr.budget, "vertex budget guard");

    SolveArgs sol;
    CLI::App* solve = app.add_subcommand("solve", "exact solvers");
    solve->add_option("problem", sol.problem, "alpha|chi|kappa|theta-e|rankwidth")
        ->required();
    solve->add_option("--input,-i", sol.input, "input graph")->required();
    solve->add_option("--certificate", sol.certificate, "JSON certificate path");
    solve->add_option("--time-limit", sol.time_limit, "seconds (0 = none)");
    solve->add_flag("--exact", "rankwidth: exact subset DP (default)");
    solve->add_flag("--linear", sol.linear, "rankwidth: linear variant");
    solve->add_flag("--greedy", sol.greedy, "rankwidth: caterpillar upper bound");
    solve->add_option("--max-n", sol.max_n, "rankwidth: override size guard");
    solve->add_option("--seed", sol.seed, "rankwidth greedy seed");
    solve->add_option("--restarts", sol.restarts, "rankwidth greedy restarts");

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", ver.suite,
                       "lemma-alpha|gyarfas|correspondence|theta-kappa|"
                       "complement-gap|shearer")
        ->required();
    verify->add_option("--n", ver.n_spec,
                       "cocktail party size K or range LO..HI "
                       "(lemma-alpha, shearer)");
    verify->add_option("--r", ver.shearer_r, "shearer: iterations");
    verify->add_option("--corpus", ver.corpus, "graph corpus to draw from")
        ->check(CLI::IsMember({"small"}));
    verify->add_option("--format", ver.format, "report format")
        ->check(CLI::IsMember({"tsv", "json"}));
    verify->add_option("--json", ver.json_out, "also write the JSON report here");

    GrowthArgs gro;
    CLI::App* table = app.add_subcommand("table", "study tables");
    CLI::App* growth = table->add_subcommand("growth", "cover number growth");
    growth->add_option("--n-lo", gro.n_lo, "first cocktail party size");
    growth->add_option("--n-hi", gro.n_hi, "last cocktail party size");
    growth->add_option("--seed", gro.seed, "seed for bound restarts");
    growth->add_option("--format", gro.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    growth->add_option("--out,-o", gro.out, "output path (default stdout)");

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand("sweep", "sampling sweeps");
    CLI::App* cographs = sweep->add_subcommand("cographs", "random cograph invariants");
    cographs->add_option("--max-n", sw.max_n, "max leaves per sample");
    cographs->add_option("--samples", sw.samples, "sample count");
    cographs->add_option("--seed", sw.seed, "rng seed");
    cographs->add_option("--time-limit", sw.time_limit, "per-solve seconds (0 = none)");
    cographs->add_option("--format", sw.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    cographs->add_option("--out,-o", sw.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (*generate) return run_generate(gen);
        if (*transform) {
            if (!*ke) throw CLI::ValidationError("transform needs a subcommand");
            return run_transform(tr);
        }
        if (*solve) return run_solve(sol);
        if (*verify) return run_verify(ver);
        if (*table) {
            if (!*growth) throw CLI::ValidationError("table needs a subcommand");
            return run_growth(gro);
        }
        if (*sweep) {
            if (!*cographs) throw CLI::ValidationError("sweep needs a subcommand");
            return run_sweep(sw);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const guard_error& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
