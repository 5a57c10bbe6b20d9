// Acceptance gate: one line per criterion, PASS only when the check
// succeeds inside its wall-clock budget. Exit 0 iff every criterion
// passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "eclab/cograph.hpp"
#include "eclab/harness.hpp"
#include "oracles.hpp"

using namespace eclab;

namespace {

int failures = 0;

template <class F>
void criterion(int id, const std::string& text, double budget_s, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        note = body();
        ok = true;
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = elapsed <= budget_s;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d: %s [%.2fs / budget %.0fs]%s%s\n",
                pass ? "PASS" : "FAIL", id, text.c_str(), elapsed, budget_s,
                note.empty() ? "" : " — ", note.c_str());
}

std::string require(bool cond, const std::string& why) {
    if (!cond) throw std::runtime_error(why);
    return "";
}

}  // namespace

int main() {
    criterion(1, "independence number of edge-clique cocktail party graphs is 4 (n=2..8)",
              120, [] {
        const SuiteResult r = suite_lemma_alpha(2, 8);
        require(r.all_pass, "suite reported a violation");
        return std::to_string(r.cases.size()) + " sizes checked";
    });

    criterion(2, "logarithmic cover bound holds on 500+ applicable graphs (<=7 vertices)",
              300, [] {
        const SuiteResult r = suite_gyarfas(500, 7);
        require(r.all_pass, "bound violated");
        return r.cases.back().detail;
    });

    criterion(3, "theta_e equals the clique cover number of the edge-clique graph",
              300, [] {
        const SuiteResult r = suite_theta_kappa(60);
        require(r.all_pass, "identity failed");
        return r.cases.back().detail;
    });

    criterion(4, "exact cocktail party cover numbers dominate the log bound (n=2..6)",
              120, [] {
        const long want[] = {4, 4, 5, 6, 6};  // regression pins, n = 2..6
        for (int n = 2; n <= 6; ++n) {
            const SolveReport theta = edge_clique_cover(make_cocktail_party(n));
            require(theta.optimal, "solver timed out");
            require(theta.objective >= ceil_log2(2L * n + 1),
                    "log bound violated at n=" + std::to_string(n));
            require(theta.objective == want[n - 2],
                    "pinned value changed at n=" + std::to_string(n));
        }
        return std::string("theta_e(cp(2..6)) = 4,4,5,6,6");
    });

    criterion(5, "maximal cliques correspond one-to-one with edge-clique maximal cliques",
              120, [] {
        const SuiteResult r = suite_correspondence(200);
        require(r.all_pass, "correspondence failed");
        return r.cases.back().detail;
    });

    criterion(6, "iterated independence bound alpha(ke^2(cp(3))) <= 72, solved exactly",
              60, [] {
        const SuiteResult r = suite_shearer(3, 2);
        require(r.all_pass, "bound violated");
        return r.cases.back().detail;
    });

    criterion(7, "exact rankwidth agrees with ternary-tree enumeration; goldens hold",
              600, [] {
        std::vector<Graph> corpus;
        for (int n = 1; n <= 6; ++n) corpus.push_back(make_empty(n));
        for (int n = 2; n <= 6; ++n) corpus.push_back(make_complete(n));
        for (int n = 2; n <= 6; ++n) corpus.push_back(make_path(n));
        for (int n = 3; n <= 6; ++n) corpus.push_back(make_cycle(n));
        std::mt19937_64 rng(4321);
        while (corpus.size() < 220)
            corpus.push_back(random_graph(4 + int(rng() % 3),
                                          0.2 + 0.1 * double(rng() % 7), rng()));
        for (const Graph& g : corpus) {
            const RankwidthResult exact = exact_rankwidth(g);
            require(exact.width == oracles::rankwidth(g),
                    "subset DP disagrees with tree enumeration");
            require(verify_branch_decomposition(g, exact.decomposition).matches_claimed,
                    "certificate does not realize the width");
            require(linear_rankwidth(g).width >= exact.width,
                    "linear variant fell below the exact width");
        }
        require(exact_rankwidth(make_cycle(5)).width == 2, "rw(C5) != 2");
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = cograph_from_cotree(random_cotree(2 + trial % 11, rng()));
            require(exact_rankwidth(g).width <= 1, "cograph exceeded width 1");
        }
        const Graph ke = edge_clique_graph(make_cocktail_party(3)).graph;
        require(exact_rankwidth(ke).width == 3, "rw of ke(cp(3)) changed");
        return std::to_string(corpus.size()) +
               " graphs cross-validated; rw(ke(cp(3))) = 3";
    });

    criterion(8, "rankwidth of graph and complement differ by at most one (100 samples)",
              600, [] {
        const SuiteResult r = suite_complement_gap(100, 7);
        require(r.all_pass, "gap exceeded one");
        return r.cases.back().detail;
    });

    criterion(9, "growth evidence substitute: cover numbers and width bounds tabulated",
              600, [] {
        // The asymptotic statements (unbounded rankwidth, the limit of
        // theta_e(cp(n))/log2(n)) are not machine-checkable on desk
        // hardware; the agreed substitute is the exact growth table
        // plus the bound suites above.
        const std::vector<GrowthRow> rows = growth_table(2, 6);
        for (const GrowthRow& row : rows) {
            require(row.theta_e >= row.log_lb, "cover number under the log bound");
            if (row.n <= 3)
                require(row.rw_exact, "small rows must be exact");
            else
                require(!row.rw_exact, "guard unexpectedly admitted a large row");
        }
        require(rows[1].rw_ke == 3, "exact width of ke(cp(3)) changed");
        for (std::size_t i = 1; i < rows.size(); ++i)
            require(rows[i].theta_e >= rows[i - 1].theta_e,
                    "cover number regressed while n grew");
        return std::string("rows n=2..6 tabulated, bounds coherent");
    });

    criterion(10, "cut-rank laws on 10^4 sampled subsets (span oracle, symmetry, submodularity)",
              60, [] {
        std::mt19937_64 rng(24680);
        int samples = 0;
        while (samples < 10000) {
            const int n = 2 + int(rng() % 9);
            const Graph g = random_graph(n, 0.2 + 0.1 * double(rng() % 7), rng());
            for (int rep = 0; rep < 10 && samples < 10000; ++rep, ++samples) {
                VertexSet a(n), b(n);
                for (int v = 0; v < n; ++v) {
                    if (rng() & 1) a.set(v);
                    if (rng() & 1) b.set(v);
                }
                const int ra = cut_rank(g, a);
                require(ra == oracles::cut_rank(g, a), "span oracle mismatch");
                require(ra == cut_rank(g, ~a), "cut rank asymmetry");
                require(ra <= std::min(a.count(), n - a.count()),
                        "rank above the trivial bound");
                require(cut_rank(g, a) + cut_rank(g, b) >=
                            cut_rank(g, a | b) + cut_rank(g, a & b),
                        "submodularity violated");
            }
        }
        return std::to_string(samples) + " subsets checked";
    });

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
