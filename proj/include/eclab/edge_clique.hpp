#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "eclab/cliques.hpp"
#include "eclab/graph.hpp"

namespace eclab {

// Vertex i of K_e(G) is catalog.edges[i]; edges sorted (u,v), u < v,
// lexicographically, so the transform is reproducible bit for bit.
struct EdgeCatalog {
    std::vector<Edge> edges;

    int size() const { return int(edges.size()); }

    // Index of (u,v) in the catalog, or -1.
    int index_of(int u, int v) const {
        if (u > v) std::swap(u, v);
        const Edge key{u, v};
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        if (it == edges.end() || !(*it == key)) return -1;
        return int(it - edges.begin());
    }
};

struct EdgeCliqueResult {
    Graph graph;          // K_e(G)
    EdgeCatalog catalog;  // provenance of each vertex
};

namespace detail {

// Two distinct edges span a clique iff the union of their endpoints
// induces a complete subgraph: sharing endpoint a with free ends b, c
// needs b~c; disjoint {a,b},{c,d} needs all four cross pairs.
inline bool edges_in_common_clique(const Graph& g, const Edge& e, const Edge& f) {
    int shared = -1, p = -1, q = -1;
    if (e.u == f.u) { shared = e.u; p = e.v; q = f.v; }
    else if (e.u == f.v) { shared = e.u; p = e.v; q = f.u; }
    else if (e.v == f.u) { shared = e.v; p = e.u; q = f.v; }
    else if (e.v == f.v) { shared = e.v; p = e.u; q = f.u; }
    if (shared >= 0) return g.has_edge(p, q);
    return g.has_edge(e.u, f.u) && g.has_edge(e.u, f.v) &&
           g.has_edge(e.v, f.u) && g.has_edge(e.v, f.v);
}

}  // namespace detail

inline EdgeCliqueResult edge_clique_graph(const Graph& g) {
    EdgeCliqueResult r;
    r.catalog.edges = g.edges();
    const int m = r.catalog.size();
    r.graph = Graph(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (detail::edges_in_common_clique(g, r.catalog.edges[i], r.catalog.edges[j]))
                r.graph.add_edge(i, j);
    r.graph.check_invariants();
    return r;
}

constexpr int kDefaultIterateBudget = 5000;

// r-fold application K_e^r with every intermediate catalog. steps[k]
// holds the (k+1)-st iterate; r = 0 leaves steps empty and final = g.
struct EdgeCliqueChain {
    Graph final;
    std::vector<EdgeCliqueResult> steps;
};

inline EdgeCliqueChain iterated_edge_clique(const Graph& g, int r,
                                            int vertex_budget = kDefaultIterateBudget) {
    if (r < 0) throw std::invalid_argument("iterate count must be nonnegative");
    EdgeCliqueChain chain;
    chain.final = g;
    for (int k = 0; k < r; ++k) {
        const long next_vertices = chain.final.edge_count();
        if (next_vertices > vertex_budget)
            throw guard_error("edge-clique iterate " + std::to_string(k + 1) +
                              " would have " + std::to_string(next_vertices) +
                              " vertices, over budget " + std::to_string(vertex_budget));
        chain.steps.push_back(edge_clique_graph(chain.final));
        chain.final = chain.steps.back().graph;
    }
    return chain;
}

// Albertson-Collins check: each maximal clique of g maps to the set of
// its edges, which must be a maximal clique of K_e(g); the map must be
// injective and the clique counts must agree. Requires g free of
// isolated vertices (size-1 maximal cliques have no edge image).
struct CorrespondenceReport {
    bool precondition_ok = false;
    VertexSet isolated;  // offending vertices when precondition fails
    std::size_t count_g = 0;
    std::size_t count_ke = 0;
    bool matched = false;
};

inline CorrespondenceReport verify_clique_correspondence(const Graph& g) {
    CorrespondenceReport rep;
    rep.isolated = isolated_vertices(g);
    if (rep.isolated.any()) return rep;
    rep.precondition_ok = true;

    const EdgeCliqueResult ke = edge_clique_graph(g);
    const std::vector<VertexSet> cliques_g = maximal_cliques(g);
    const std::vector<VertexSet> cliques_ke = maximal_cliques(ke.graph);
    rep.count_g = cliques_g.size();
    rep.count_ke = cliques_ke.size();

    std::set<VertexSet> ke_lookup(cliques_ke.begin(), cliques_ke.end());
    std::set<VertexSet> images;
    for (const VertexSet& c : cliques_g) {
        if (c.count() < 2) return rep;  // unreachable without isolated vertices
        VertexSet image(ke.graph.vertex_count());
        for (int u = c.first(); u >= 0; u = c.next(u))
            for (int v = c.next(u); v >= 0; v = c.next(v))
                image.set(ke.catalog.index_of(u, v));
        if (!ke_lookup.count(image)) return rep;       // image not maximal in K_e
        if (!images.insert(image).second) return rep;  // not injective
    }
    rep.matched = images.size() == rep.count_g && rep.count_g == rep.count_ke;
    return rep;
}

}  // namespace eclab
