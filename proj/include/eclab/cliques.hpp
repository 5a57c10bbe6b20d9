#pragma once

#include <algorithm>
#include <vector>

#include "eclab/graph.hpp"
#include "eclab/vertex_set.hpp"

namespace eclab {

namespace detail {

// Bron-Kerbosch with pivoting. Pivot maximizes |P & N(p)| over P|X,
// ties broken by lowest id, so the recursion is deterministic.
inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    const VertexSet px = p | x;
    for (int v = px.first(); v >= 0; v = px.next(v)) {
        const int cov = (p & g.neighbors(v)).count();
        if (cov > best) {
            best = cov;
            pivot = v;
        }
    }
    const VertexSet branch = p - g.neighbors(pivot);
    for (int v = branch.first(); v >= 0; v = branch.next(v)) {
        r.set(v);
        bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace detail

// All inclusion-maximal cliques, sorted by packed-set value so the
// output is reproducible. Isolated vertices appear as singletons.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.vertex_count() == 0) return out;
    VertexSet r(g.vertex_count());
    detail::bron_kerbosch(g, r, VertexSet::full(g.vertex_count()),
                          VertexSet(g.vertex_count()), out);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u))
        for (int v = s.next(u); v >= 0; v = s.next(v))
            if (!g.has_edge(u, v)) return false;
    return true;
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u))
        if (g.neighbors(u).intersects(s)) return false;
    return true;
}

}  // namespace eclab
