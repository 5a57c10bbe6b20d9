#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eclab/cliques.hpp"
#include "eclab/edge_clique.hpp"
#include "eclab/graph.hpp"
#include "eclab/rankwidth.hpp"
#include "eclab/solvers.hpp"

namespace eclab {

struct NamedGraph {
    std::string name;
    Graph graph;
};

// Small structured instances used across the verification suites.
inline std::vector<NamedGraph> structured_corpus(int max_n = 7) {
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, Graph g) {
        if (g.vertex_count() <= max_n) out.push_back({std::move(name), std::move(g)});
    };
    for (int n = 1; n <= max_n; ++n) add("empty-" + std::to_string(n), Graph(n));
    for (int n = 2; n <= max_n; ++n) add("complete-" + std::to_string(n), make_complete(n));
    for (int n = 2; n <= max_n; ++n) add("path-" + std::to_string(n), make_path(n));
    for (int n = 3; n <= max_n; ++n) add("cycle-" + std::to_string(n), make_cycle(n));
    for (int n = 1; 2 * n <= max_n; ++n)
        add("matching-" + std::to_string(n), make_matching(n));
    for (int n = 2; 2 * n <= max_n; ++n)
        add("cocktail-party-" + std::to_string(n), make_cocktail_party(n));
    return out;
}

inline std::vector<NamedGraph> random_corpus(int count, int n_lo, int n_hi,
                                             std::uint64_t seed_base) {
    static const double kDensities[] = {0.3, 0.5, 0.8};
    std::vector<NamedGraph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int n = n_lo + i % (n_hi - n_lo + 1);
        const double p = kDensities[(i / (n_hi - n_lo + 1)) % 3];
        const std::uint64_t seed = seed_base + std::uint64_t(i);
        std::ostringstream name;
        name << "random-n" << n << "-p" << p << "-s" << seed;
        out.push_back({name.str(), random_graph(n, p, seed)});
    }
    return out;
}

struct SuiteCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteCase> cases;
    bool all_pass = true;
    double wall_time_s = 0.0;

    void add(std::string case_name, bool pass, std::string detail = "") {
        all_pass = all_pass && pass;
        cases.push_back({std::move(case_name), pass, std::move(detail)});
    }
};

namespace detail {

class SuiteTimer {
public:
    explicit SuiteTimer(SuiteResult& result)
        : result_(result), t0_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer() {
        result_.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
                .count();
    }

private:
    SuiteResult& result_;
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace detail

// Independence number of the edge-clique graph of a cocktail party
// graph is exactly 4 for every n >= 2.
inline SuiteResult suite_lemma_alpha(int n_lo = 2, int n_hi = 8) {
    SuiteResult result;
    result.name = "lemma-alpha";
    detail::SuiteTimer timer(result);
    for (int n = n_lo; n <= n_hi; ++n) {
        const Graph ke = edge_clique_graph(make_cocktail_party(n)).graph;
        const SolveReport report = max_independent_set(ke);
        std::ostringstream detail_text;
        detail_text << "alpha(ke(cp(" << n << "))) = " << report.objective
                    << " on " << ke.vertex_count() << " vertices";
        result.add("cocktail-party-" + std::to_string(n),
                   report.optimal && report.objective == 4, detail_text.str());
    }
    return result;
}

// Every graph without isolated or equivalent vertices satisfies
// 2^theta_e >= n+1 (integer form of the logarithmic lower bound).
inline SuiteResult suite_gyarfas(int min_graphs = 500, int max_n = 7,
                                 std::uint64_t seed_base = 1000) {
    SuiteResult result;
    result.name = "gyarfas";
    detail::SuiteTimer timer(result);
    std::vector<NamedGraph> corpus;
    for (int n = 4; n <= max_n; ++n) {
        corpus.push_back({"path-" + std::to_string(n), make_path(n)});
        corpus.push_back({"cycle-" + std::to_string(n), make_cycle(n)});
    }
    static const double kDensities[] = {0.3, 0.5, 0.8};
    std::uint64_t seed = seed_base;
    while (int(corpus.size()) < min_graphs) {
        const int n = 4 + int(seed % std::uint64_t(max_n - 3));
        const double p = kDensities[(seed / 7) % 3];
        Graph g = random_graph(n, p, seed);
        ++seed;
        if (!gyarfas_lower_bound(g).applicable) continue;
        std::ostringstream name;
        name << "random-n" << n << "-p" << p << "-s" << (seed - 1);
        corpus.push_back({name.str(), std::move(g)});
    }
    int failures = 0;
    for (const NamedGraph& item : corpus) {
        const GyarfasBound gb = gyarfas_lower_bound(item.graph);
        if (!gb.applicable) continue;  // structured entries may be excluded
        const SolveReport theta = edge_clique_cover(item.graph);
        const long n = item.graph.vertex_count();
        const bool holds = theta.optimal && theta.objective < 62 &&
                           (1L << theta.objective) >= n + 1 &&
                           theta.objective >= gb.value;
        if (!holds) {
            ++failures;
            std::ostringstream detail_text;
            detail_text << "theta_e = " << theta.objective << ", n = " << n;
            result.add(item.name, false, detail_text.str());
        }
    }
    std::ostringstream summary;
    summary << corpus.size() << " applicable graphs checked, " << failures
            << " violations";
    result.add("corpus", failures == 0, summary.str());
    return result;
}

// Maximal cliques of G map one-to-one onto maximal cliques of its
// edge-clique graph (edge-index images), for graphs without isolated
// vertices.
inline SuiteResult suite_correspondence(int random_count = 200,
                                        std::uint64_t seed_base = 2000) {
    SuiteResult result;
    result.name = "correspondence";
    detail::SuiteTimer timer(result);
    std::vector<NamedGraph> corpus;
    for (int n = 2; n <= 5; ++n)
        corpus.push_back({"cocktail-party-" + std::to_string(n),
                          make_cocktail_party(n)});
    static const double kDensities[] = {0.3, 0.5, 0.8};
    std::uint64_t seed = seed_base;
    while (int(corpus.size()) < random_count + 4) {
        const int n = 4 + int(seed % 5);  // 4..8
        const double p = kDensities[(seed / 5) % 3];
        Graph g = random_graph(n, p, seed);
        ++seed;
        const VertexSet isolated = isolated_vertices(g);
        if (isolated.count() == g.vertex_count()) continue;
        if (!isolated.empty()) {
            VertexSet keep = ~isolated;
            g = induced_subgraph(g, keep);
        }
        std::ostringstream name;
        name << "random-n" << g.vertex_count() << "-p" << p << "-s" << (seed - 1);
        corpus.push_back({name.str(), std::move(g)});
    }
    int failures = 0;
    for (const NamedGraph& item : corpus) {
        const CorrespondenceReport report = verify_clique_correspondence(item.graph);
        const bool ok = report.precondition_ok && report.matched &&
                        report.count_g == report.count_ke;
        if (!ok) {
            ++failures;
            std::ostringstream detail_text;
            detail_text << "cliques(g) = " << report.count_g
                        << ", cliques(ke) = " << report.count_ke;
            result.add(item.name, false, detail_text.str());
        }
    }
    std::ostringstream summary;
    summary << corpus.size() << " graphs checked, " << failures << " mismatches";
    result.add("corpus", failures == 0, summary.str());
    return result;
}

// theta_e(G) equals the vertex clique cover number of the edge-clique
// graph, checked by independent exact solves on both sides.
inline SuiteResult suite_theta_kappa(int random_count = 60,
                                     std::uint64_t seed_base = 3000) {
    SuiteResult result;
    result.name = "theta-kappa";
    detail::SuiteTimer timer(result);
    std::vector<NamedGraph> corpus = structured_corpus(7);
    for (NamedGraph& item : random_corpus(random_count, 4, 7, seed_base))
        corpus.push_back(std::move(item));
    int failures = 0;
    for (const NamedGraph& item : corpus) {
        const SolveReport theta = edge_clique_cover(item.graph);
        const Graph ke = edge_clique_graph(item.graph).graph;
        const SolveReport kappa = vertex_clique_cover(ke);
        const bool ok = theta.optimal && kappa.optimal &&
                        theta.objective == kappa.objective;
        if (!ok) {
            ++failures;
            std::ostringstream detail_text;
            detail_text << "theta_e = " << theta.objective
                        << ", kappa(ke) = " << kappa.objective;
            result.add(item.name, false, detail_text.str());
        }
    }
    std::ostringstream summary;
    summary << corpus.size() << " graphs checked, " << failures << " mismatches";
    result.add("corpus", failures == 0, summary.str());
    return result;
}

// Rankwidth of a graph and of its complement differ by at most one.
inline SuiteResult suite_complement_gap(int random_count = 100, int n = 7,
                                        std::uint64_t seed_base = 4000) {
    SuiteResult result;
    result.name = "complement-gap";
    detail::SuiteTimer timer(result);
    static const double kDensities[] = {0.3, 0.5, 0.8};
    int failures = 0;
    for (int i = 0; i < random_count; ++i) {
        const std::uint64_t seed = seed_base + std::uint64_t(i);
        const double p = kDensities[i % 3];
        const Graph g = random_graph(n, p, seed);
        const ComplementGapReport report = complement_gap_check(g);
        if (!report.within_one) {
            ++failures;
            std::ostringstream name, detail_text;
            name << "random-n" << n << "-p" << p << "-s" << seed;
            detail_text << "rw(g) = " << report.rw_graph << ", rw(complement) = "
                        << report.rw_complement;
            result.add(name.str(), false, detail_text.str());
        }
    }
    std::ostringstream summary;
    summary << random_count << " graphs checked, " << failures << " gaps > 1";
    result.add("corpus", failures == 0, summary.str());
    return result;
}

// alpha of the r-th iterated edge-clique graph of cp(n) is at most
// 3 * (2^r)! — checked exactly for desk-scale n and r.
inline SuiteResult suite_shearer(int n = 3, int r = 2) {
    SuiteResult result;
    result.name = "shearer";
    detail::SuiteTimer timer(result);
    long bound = 3;
    for (long i = 2; i <= (1L << r); ++i) bound *= i;  // 3 * (2^r)!
    const EdgeCliqueChain chain = iterated_edge_clique(make_cocktail_party(n), r);
    const SolveReport alpha = max_independent_set(chain.final);
    std::ostringstream detail_text;
    detail_text << "alpha(ke^" << r << "(cp(" << n << "))) = " << alpha.objective
                << " <= " << bound << " on " << chain.final.vertex_count()
                << " vertices";
    result.add("cocktail-party-" + std::to_string(n) + "-r" + std::to_string(r),
               alpha.optimal && alpha.objective <= bound, detail_text.str());
    return result;
}

// --- growth table -----------------------------------------------------------

struct GrowthRow {
    int n = 0;
    long theta_e = 0;
    long log_lb = 0;      // ceil(log2(2n+1))
    double ratio = 0.0;   // theta_e / log2(n)
    long rw_ke = 0;
    bool rw_exact = false;
};

// theta_e(cp(n)) with the logarithmic lower bound and the rankwidth of
// the edge-clique graph (exact while the DP guard admits it, greedy
// caterpillar upper bound beyond).
inline std::vector<GrowthRow> growth_table(int n_lo, int n_hi,
                                           std::uint64_t seed = 0) {
    if (n_lo < 2 || n_hi < n_lo)
        throw std::invalid_argument("growth table needs 2 <= n_lo <= n_hi");
    std::vector<GrowthRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        GrowthRow row;
        row.n = n;
        const Graph cp = make_cocktail_party(n);
        row.theta_e = edge_clique_cover(cp).objective;
        row.log_lb = ceil_log2(2L * n + 1);
        row.ratio = double(row.theta_e) / std::log2(double(n));
        const Graph ke = edge_clique_graph(cp).graph;
        if (ke.vertex_count() <= kExactRankwidthGuard) {
            row.rw_ke = exact_rankwidth(ke).width;
            row.rw_exact = true;
        } else {
            row.rw_ke = greedy_rankwidth_upper_bound(ke, seed).width;
            row.rw_exact = false;
        }
        rows.push_back(row);
    }
    return rows;
}

inline void write_growth_tsv(std::ostream& out, const std::vector<GrowthRow>& rows) {
    out << "n\ttheta_e\tlog2_lb\tratio\trw_ke\trw_kind\n";
    for (const GrowthRow& r : rows) {
        std::ostringstream ratio;
        ratio << std::fixed << std::setprecision(3) << r.ratio;
        out << r.n << '\t' << r.theta_e << '\t' << r.log_lb << '\t' << ratio.str()
            << '\t' << r.rw_ke << '\t' << (r.rw_exact ? "exact" : "upper-bound")
            << '\n';
    }
}

}  // namespace eclab
