#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eclab/edge_clique.hpp"
#include "eclab/graph.hpp"
#include "eclab/solvers.hpp"

namespace eclab {

// Rooted union/join tree. Valid trees are normalized: internal nodes
// have >= 2 children and labels alternate along root-to-leaf paths;
// leaf labels form 0..n-1.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind = Kind::Leaf;
        int vertex = -1;  // leaves only
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;

    int add_leaf(int vertex) {
        nodes.push_back({Kind::Leaf, vertex, {}});
        return int(nodes.size()) - 1;
    }
    int add_internal(Kind kind, std::vector<int> children) {
        nodes.push_back({kind, -1, std::move(children)});
        return int(nodes.size()) - 1;
    }
};

namespace detail {

inline void validate_cotree(const Cotree& t) {
    auto malformed = [](const std::string& why) {
        throw std::invalid_argument("malformed cotree: " + why);
    };
    if (t.root < 0 || t.root >= int(t.nodes.size())) malformed("bad root index");
    std::vector<char> visited(t.nodes.size(), 0);
    std::vector<int> leaves;
    auto walk = [&](auto&& self, int idx, Cotree::Kind parent) -> void {
        if (idx < 0 || idx >= int(t.nodes.size())) malformed("bad child index");
        if (visited[idx]) malformed("node reached twice");
        visited[idx] = 1;
        const Cotree::Node& node = t.nodes[idx];
        if (node.kind == Cotree::Kind::Leaf) {
            if (!node.children.empty()) malformed("leaf with children");
            if (node.vertex < 0) malformed("leaf without vertex label");
            leaves.push_back(node.vertex);
            return;
        }
        if (node.kind == parent) malformed("adjacent internal nodes share a label");
        if (node.children.size() < 2) malformed("internal node with < 2 children");
        for (int c : node.children) self(self, c, node.kind);
    };
    // The root's label is unconstrained; pass the label it cannot be.
    walk(walk, t.root,
         t.nodes[t.root].kind == Cotree::Kind::Union ? Cotree::Kind::Join
                                                     : Cotree::Kind::Union);
    std::vector<int> sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != int(i)) malformed("leaf labels are not 0..n-1");
}

}  // namespace detail

// Two vertices are adjacent iff their lowest common ancestor is a JOIN.
inline Graph cograph_from_cotree(const Cotree& t) {
    detail::validate_cotree(t);
    int n = 0;
    for (const auto& node : t.nodes)
        if (node.kind == Cotree::Kind::Leaf) ++n;
    Graph g(n);
    auto collect = [&](auto&& self, int idx) -> std::vector<int> {
        const Cotree::Node& node = t.nodes[idx];
        if (node.kind == Cotree::Kind::Leaf) return {node.vertex};
        std::vector<std::vector<int>> parts;
        parts.reserve(node.children.size());
        for (int c : node.children) parts.push_back(self(self, c));
        if (node.kind == Cotree::Kind::Join)
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    for (int u : parts[i])
                        for (int v : parts[j]) g.add_edge(u, v);
        std::vector<int> all;
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
        return all;
    };
    collect(collect, t.root);
    g.check_invariants();
    return g;
}

constexpr int kCographRecognitionGuard = 40;

struct CographCheck {
    bool is_cograph = false;
    std::vector<int> p4;  // induced-P4 witness when not a cograph
};

// P4-free test by brute-force induced-subgraph search; the first
// witness in lexicographic subset order is returned.
inline CographCheck is_cograph(const Graph& g, int max_n = kCographRecognitionGuard) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw guard_error("cograph recognition guard: " + std::to_string(n) +
                          " vertices exceeds limit " + std::to_string(max_n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int quad[4] = {a, b, c, d};
                    int edges = 0, deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(quad[i], quad[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    // Three edges with degrees in {1,2} is exactly P4.
                    if (edges == 3 && deg[0] >= 1 && deg[1] >= 1 && deg[2] >= 1 &&
                        deg[3] >= 1 && deg[0] <= 2 && deg[1] <= 2 && deg[2] <= 2 &&
                        deg[3] <= 2)
                        return {false, {a, b, c, d}};
                }
    return {true, {}};
}

// Random normalized cotree on n leaves; leaf ids run 0..n-1 left to
// right. Identical seed replays the identical tree.
inline Cotree random_cotree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("cotree needs at least one leaf");
    std::mt19937_64 rng(seed);
    Cotree t;
    auto flip = [](Cotree::Kind k) {
        return k == Cotree::Kind::Union ? Cotree::Kind::Join : Cotree::Kind::Union;
    };
    auto build = [&](auto&& self, int lo, int hi, Cotree::Kind kind) -> int {
        const int count = hi - lo;
        if (count == 1) return t.add_leaf(lo);
        const int k = 2 + int(rng() % std::uint64_t(count - 1));  // children in [2, count]
        // k-1 distinct cut points out of 1..count-1, by partial shuffle.
        std::vector<int> cuts(count - 1);
        std::iota(cuts.begin(), cuts.end(), 1);
        for (int i = 0; i < k - 1; ++i) {
            const int j = i + int(rng() % std::uint64_t(cuts.size() - i));
            std::swap(cuts[i], cuts[j]);
        }
        cuts.resize(k - 1);
        std::sort(cuts.begin(), cuts.end());
        std::vector<int> children;
        int prev = 0;
        cuts.push_back(count);
        for (int cut : cuts) {
            children.push_back(self(self, lo + prev, lo + cut, flip(kind)));
            prev = cut;
        }
        return t.add_internal(kind, std::move(children));
    };
    const Cotree::Kind root_kind =
        (rng() & 1) ? Cotree::Kind::Join : Cotree::Kind::Union;
    t.root = build(build, 0, n, root_kind);
    return t;
}

// One row of the conjecture harness: exact invariants of a sampled
// cograph for human study of hardness structure.
struct SweepRow {
    int id = 0;
    int n = 0;
    long m = 0;
    long theta_e = 0;
    bool gyarfas_applicable = false;
    long gyarfas_lb = 0;
    long alpha_ke = 0;
    long max_cliques = 0;
    bool timed_out = false;
};

inline SweepRow sweep_row(int id, const Cotree& t,
                          std::optional<double> time_limit_s = {}) {
    SweepRow row;
    row.id = id;
    const Graph g = cograph_from_cotree(t);
    row.n = g.vertex_count();
    row.m = g.edge_count();

    Deadline deadline;
    if (time_limit_s) deadline = deadline_after(*time_limit_s);
    const SolveReport theta = edge_clique_cover(g, deadline);
    row.theta_e = theta.objective;

    const GyarfasBound gb = gyarfas_lower_bound(g);
    row.gyarfas_applicable = gb.applicable;
    row.gyarfas_lb = gb.value;

    if (time_limit_s) deadline = deadline_after(*time_limit_s);
    const SolveReport alpha = max_independent_set(edge_clique_graph(g).graph, deadline);
    row.alpha_ke = alpha.objective;

    row.max_cliques = long(maximal_cliques(g).size());
    row.timed_out = !theta.optimal || !alpha.optimal;
    return row;
}

inline std::vector<SweepRow> conjecture_sweep(int n_max, int samples,
                                              std::uint64_t seed,
                                              std::optional<double> time_limit_s = {}) {
    if (n_max < 1) throw std::invalid_argument("sweep needs n_max >= 1");
    std::mt19937_64 pick(seed);
    std::vector<SweepRow> rows;
    rows.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const int n = 1 + int(pick() % std::uint64_t(n_max));
        const Cotree t = random_cotree(n, pick());
        rows.push_back(sweep_row(i, t, time_limit_s));
    }
    return rows;
}

inline void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "id\tn\tm\ttheta_e\tgyarfas_lb\talpha_ke\tmax_cliques\tstatus\n";
    for (const SweepRow& r : rows) {
        out << r.id << '\t' << r.n << '\t' << r.m << '\t' << r.theta_e << '\t';
        if (r.gyarfas_applicable)
            out << r.gyarfas_lb;
        else
            out << "na";
        out << '\t' << r.alpha_ke << '\t' << r.max_cliques << '\t'
            << (r.timed_out ? "timeout" : "ok") << '\n';
    }
}

}  // namespace eclab
