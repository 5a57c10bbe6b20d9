#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "eclab/cliques.hpp"
#include "eclab/edge_clique.hpp"
#include "eclab/graph.hpp"

namespace eclab {

using SolveClock = std::chrono::steady_clock;
using Deadline = std::optional<SolveClock::time_point>;

inline Deadline deadline_after(double seconds) {
    return SolveClock::now() +
           std::chrono::duration_cast<SolveClock::duration>(
               std::chrono::duration<double>(seconds));
}

// Certificate of an edge-clique cover (every part a clique, every edge
// in some part) or, for kappa, a partition of V into cliques.
struct CliqueCover {
    std::vector<VertexSet> parts;
};

using Coloring = std::vector<int>;

struct SolveReport {
    long objective = 0;
    std::variant<std::monostate, VertexSet, Coloring, CliqueCover> certificate;
    long lower_bound_used = 0;
    std::uint64_t nodes_explored = 0;
    double wall_time_s = 0.0;
    bool optimal = true;  // false when a deadline stopped the search

    const VertexSet& witness() const { return std::get<VertexSet>(certificate); }
    const Coloring& coloring() const { return std::get<Coloring>(certificate); }
    const CliqueCover& cover() const { return std::get<CliqueCover>(certificate); }
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (int(c.size()) != g.vertex_count()) return false;
    for (const Edge& e : g.edges())
        if (c[e.u] == c[e.v]) return false;
    for (int v : c)
        if (v < 0) return false;
    return true;
}

// Re-verification of the edge-clique cover definition.
inline bool verify_cover(const Graph& g, const CliqueCover& c) {
    for (const VertexSet& part : c.parts) {
        if (part.universe() != g.vertex_count()) return false;
        if (!is_clique(g, part)) return false;
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const VertexSet& part : c.parts)
            if (part.test(e.u) && part.test(e.v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

// Partition-of-V check used for kappa certificates.
inline bool verify_vertex_partition(const Graph& g, const CliqueCover& c) {
    VertexSet seen(g.vertex_count());
    for (const VertexSet& part : c.parts) {
        if (part.universe() != g.vertex_count() || part.empty()) return false;
        if (part.intersects(seen)) return false;
        if (!is_clique(g, part)) return false;
        seen |= part;
    }
    return seen == VertexSet::full(g.vertex_count());
}

namespace detail {

inline bool past(const Deadline& d) {
    return d && SolveClock::now() > *d;
}

// Greedy clique: repeatedly add the candidate with most candidate
// neighbors (lowest id on ties).
inline VertexSet greedy_clique(const Graph& g) {
    VertexSet r(g.vertex_count());
    VertexSet p = VertexSet::full(g.vertex_count());
    while (p.any()) {
        int pick = -1, best = -1;
        for (int v = p.first(); v >= 0; v = p.next(v)) {
            const int d = (p & g.neighbors(v)).count();
            if (d > best) {
                best = d;
                pick = v;
            }
        }
        r.set(pick);
        p &= g.neighbors(pick);
    }
    return r;
}

struct MaxCliqueSearch {
    const Graph& g;
    Deadline deadline;
    VertexSet best;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    explicit MaxCliqueSearch(const Graph& graph, Deadline d)
        : g(graph), deadline(d), best(graph.vertex_count()) {}

    // Tomita-style expansion: candidates get greedy color classes, the
    // class index bounds any clique through that vertex.
    void expand(VertexSet& r, VertexSet p) {
        ++nodes;
        if ((nodes & 1023) == 0 && past(deadline)) {
            timed_out = true;
            return;
        }
        if (p.empty()) {
            if (r.count() > best.count()) best = r;
            return;
        }
        std::vector<int> order, bound;
        VertexSet uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            VertexSet cls = uncolored;
            while (cls.any()) {
                const int v = cls.first();
                cls -= g.neighbors(v);
                cls.reset(v);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        const int base = r.count();
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (base + bound[i] <= best.count()) return;
            const int v = order[i];
            r.set(v);
            expand(r, p & g.neighbors(v));
            r.reset(v);
            if (timed_out) return;
            p.reset(v);
        }
    }
};

}  // namespace detail

// Exact maximum clique with witness.
inline SolveReport max_clique(const Graph& g, Deadline deadline = {}) {
    const auto t0 = SolveClock::now();
    detail::MaxCliqueSearch search(g, deadline);
    search.best = detail::greedy_clique(g);
    const long greedy_size = search.best.count();
    if (g.vertex_count() > 0) {
        VertexSet r(g.vertex_count());
        search.expand(r, VertexSet::full(g.vertex_count()));
    }
    SolveReport rep;
    rep.objective = search.best.count();
    rep.certificate = search.best;
    rep.lower_bound_used = greedy_size;
    rep.nodes_explored = search.nodes;
    rep.optimal = !search.timed_out;
    rep.wall_time_s = std::chrono::duration<double>(SolveClock::now() - t0).count();
    assert(is_clique(g, search.best));
    return rep;
}

// alpha(g) via maximum clique on the complement.
inline SolveReport max_independent_set(const Graph& g, Deadline deadline = {}) {
    const auto t0 = SolveClock::now();
    SolveReport rep = max_clique(complement(g), deadline);
    assert(is_independent_set(g, rep.witness()));
    rep.wall_time_s = std::chrono::duration<double>(SolveClock::now() - t0).count();
    return rep;
}

namespace detail {

// Greedy DSATUR coloring; upper bound seed for the exact search.
inline Coloring dsatur_coloring(const Graph& g) {
    const int n = g.vertex_count();
    Coloring color(n, -1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::vector<bool> seen(n, false);
            int sat = 0;
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                if (color[u] >= 0 && !seen[color[u]]) {
                    seen[color[u]] = true;
                    ++sat;
                }
            const int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<bool> used(n + 1, false);
        for (int u = g.neighbors(pick).first(); u >= 0; u = g.neighbors(pick).next(u))
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[pick] = c;
    }
    return color;
}

struct KColorSearch {
    const Graph& g;
    int k;
    Deadline deadline;
    Coloring color;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    KColorSearch(const Graph& graph, int colors, Deadline d)
        : g(graph), k(colors), deadline(d), color(graph.vertex_count(), -1) {}

    bool solve(int assigned, int max_used) {
        ++nodes;
        if ((nodes & 255) == 0 && past(deadline)) {
            timed_out = true;
            return false;
        }
        const int n = g.vertex_count();
        if (assigned == n) return true;
        // DSATUR order: max saturation, then max degree, then lowest id.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::vector<bool> seen(std::size_t(k), false);
            int sat = 0;
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                if (color[u] >= 0 && !seen[color[u]]) {
                    seen[color[u]] = true;
                    ++sat;
                }
            const int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        // Symmetry break: at most one previously unused color.
        const int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u = g.neighbors(pick).first(); u >= 0; u = g.neighbors(pick).next(u))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[pick] = c;
            if (solve(assigned + 1, std::max(max_used, c))) return true;
            color[pick] = -1;
            if (timed_out) return false;
        }
        return false;
    }
};

}  // namespace detail

// Exact chromatic number: iterative deepening on k-colorability from a
// clique lower bound up to the DSATUR upper bound.
inline SolveReport chromatic_number(const Graph& g, Deadline deadline = {}) {
    const auto t0 = SolveClock::now();
    SolveReport rep;
    if (g.vertex_count() == 0) {
        rep.certificate = Coloring{};
        return rep;
    }
    const SolveReport clique = max_clique(g, deadline);
    const long lb = clique.optimal ? clique.objective : 1;
    rep.lower_bound_used = lb;
    rep.nodes_explored = clique.nodes_explored;

    Coloring best = detail::dsatur_coloring(g);
    long ub = *std::max_element(best.begin(), best.end()) + 1;
    bool proven = clique.optimal;
    for (long k = lb; k < ub; ++k) {
        detail::KColorSearch search(g, int(k), deadline);
        const bool found = search.solve(0, -1);
        rep.nodes_explored += search.nodes;
        if (search.timed_out) {
            proven = false;
            break;
        }
        if (found) {
            best = search.color;
            ub = k;
            break;
        }
    }
    rep.objective = ub;
    rep.certificate = best;
    rep.optimal = proven;
    rep.wall_time_s = std::chrono::duration<double>(SolveClock::now() - t0).count();
    assert(is_proper_coloring(g, best));
    return rep;
}

// kappa(g) = chi of the complement; color classes become the clique
// parts partitioning V.
inline SolveReport vertex_clique_cover(const Graph& g, Deadline deadline = {}) {
    const auto t0 = SolveClock::now();
    SolveReport chi = chromatic_number(complement(g), deadline);
    CliqueCover cover;
    cover.parts.assign(std::size_t(chi.objective), VertexSet(g.vertex_count()));
    const Coloring& coloring = chi.coloring();
    for (int v = 0; v < g.vertex_count(); ++v) cover.parts[coloring[v]].set(v);
    assert(verify_vertex_partition(g, cover));
    SolveReport rep;
    rep.objective = chi.objective;
    rep.certificate = std::move(cover);
    rep.lower_bound_used = chi.lower_bound_used;
    rep.nodes_explored = chi.nodes_explored;
    rep.optimal = chi.optimal;
    rep.wall_time_s = std::chrono::duration<double>(SolveClock::now() - t0).count();
    return rep;
}

// Gyarfas bound: theta_e(G) >= log2(n+1) when G has neither isolated
// nor equivalent vertices; returned as the integer ceil(log2(n+1)).
struct GyarfasBound {
    bool applicable = false;
    long value = 0;
    VertexSet isolated;
    std::vector<std::pair<int, int>> equivalent_pairs;
};

inline long ceil_log2(long x) {
    assert(x >= 1);
    long k = 0;
    while ((1L << k) < x) ++k;
    return k;
}

inline GyarfasBound gyarfas_lower_bound(const Graph& g) {
    GyarfasBound b;
    b.isolated = isolated_vertices(g);
    b.equivalent_pairs = equivalent_vertices(g);
    if (b.isolated.any() || !b.equivalent_pairs.empty()) return b;
    b.applicable = true;
    b.value = ceil_log2(long(g.vertex_count()) + 1);
    return b;
}

namespace detail {

struct CoverSearch {
    int m;
    const std::vector<VertexSet>& cand_edges;  // edge set of each candidate clique
    std::vector<std::vector<int>> edge_cands;  // candidates covering each edge
    Deadline deadline;
    std::vector<int> best;  // candidate indices of the incumbent
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    CoverSearch(int edge_count, const std::vector<VertexSet>& ce, Deadline d)
        : m(edge_count), cand_edges(ce), edge_cands(edge_count), deadline(d) {
        for (std::size_t i = 0; i < ce.size(); ++i)
            for (int e = ce[i].first(); e >= 0; e = ce[i].next(e))
                edge_cands[e].push_back(int(i));
    }

    // Fractional floor: no candidate covers more than `cap` of the
    // still-uncovered edges, so at least ceil(uncovered/cap) more are
    // needed.
    long remaining_bound(const VertexSet& covered, int uncovered) const {
        int cap = 0;
        for (const VertexSet& ce : cand_edges)
            cap = std::max(cap, (ce - covered).count());
        if (cap == 0) return long(m) + 1;  // cannot finish
        return (uncovered + cap - 1) / cap;
    }

    void search(const VertexSet& covered) {
        ++nodes;
        if ((nodes & 255) == 0 && past(deadline)) {
            timed_out = true;
            return;
        }
        const int uncovered = m - covered.count();
        if (uncovered == 0) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        if (long(chosen.size()) + remaining_bound(covered, uncovered) >=
            long(best.size()))
            return;
        // Branch on the uncovered edge lying in fewest candidates.
        int branch_edge = -1;
        std::size_t fewest = cand_edges.size() + 1;
        for (int e = 0; e < m; ++e) {
            if (covered.test(e)) continue;
            if (edge_cands[e].size() < fewest) {
                fewest = edge_cands[e].size();
                branch_edge = e;
            }
        }
        for (int i : edge_cands[branch_edge]) {
            chosen.push_back(i);
            search(covered | cand_edges[i]);
            chosen.pop_back();
            if (timed_out) return;
        }
    }
};

}  // namespace detail

// Exact theta_e: branch-and-bound set cover over maximal cliques (any
// optimal cover converts to one of maximal cliques without growing).
inline SolveReport edge_clique_cover(const Graph& g, Deadline deadline = {}) {
    const auto t0 = SolveClock::now();
    SolveReport rep;
    const std::vector<Edge> edges = g.edges();
    const int m = int(edges.size());
    if (m == 0) {
        rep.certificate = CliqueCover{};
        return rep;
    }

    std::vector<VertexSet> candidates;
    for (const VertexSet& c : maximal_cliques(g))
        if (c.count() >= 2) candidates.push_back(c);
    EdgeCatalog catalog;
    catalog.edges = edges;
    std::vector<VertexSet> cand_edges;
    cand_edges.reserve(candidates.size());
    for (const VertexSet& c : candidates) {
        VertexSet ce(m);
        for (int u = c.first(); u >= 0; u = c.next(u))
            for (int v = c.next(u); v >= 0; v = c.next(v))
                ce.set(catalog.index_of(u, v));
        cand_edges.push_back(ce);
    }

    // Greedy cover as the starting incumbent.
    std::vector<int> greedy;
    {
        VertexSet covered(m);
        while (covered.count() < m) {
            int pick = -1, gain = 0;
            for (std::size_t i = 0; i < cand_edges.size(); ++i) {
                const int add = (cand_edges[i] - covered).count();
                if (add > gain) {
                    gain = add;
                    pick = int(i);
                }
            }
            greedy.push_back(pick);
            covered |= cand_edges[pick];
        }
    }

    const GyarfasBound gb = gyarfas_lower_bound(g);
    int max_cap = 0;
    for (const VertexSet& ce : cand_edges) max_cap = std::max(max_cap, ce.count());
    const long root_lb = std::max({gb.applicable ? gb.value : 0L,
                                   long((m + max_cap - 1) / max_cap), 1L});
    rep.lower_bound_used = root_lb;

    detail::CoverSearch search(m, cand_edges, deadline);
    search.best = greedy;
    if (long(greedy.size()) > root_lb) search.search(VertexSet(m));

    CliqueCover cover;
    for (int i : search.best) cover.parts.push_back(candidates[i]);
    assert(verify_cover(g, cover));
    rep.objective = long(cover.parts.size());
    rep.certificate = std::move(cover);
    rep.nodes_explored = search.nodes;
    rep.optimal = !search.timed_out;
    rep.wall_time_s = std::chrono::duration<double>(SolveClock::now() - t0).count();
    return rep;
}

}  // namespace eclab
