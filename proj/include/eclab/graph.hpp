#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eclab/vertex_set.hpp"

namespace eclab {

// Thrown when an operation would exceed a size or resource guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u, v;  // u < v
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Simple undirected graph on vertices 0..n-1, one packed adjacency set
// per vertex. Symmetric and irreflexive by construction; treated as
// immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
        assert(n >= 0);
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void remove_edge(int u, int v) {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    bool has_edge(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return u != v && adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        assert(v >= 0 && v < n_);
        return adj_[v];
    }

    int degree(int v) const { return adj_[v].count(); }

    long edge_count() const {
        long deg = 0;
        for (int v = 0; v < n_; ++v) deg += degree(v);
        return deg / 2;
    }

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(std::size_t(edge_count()));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                out.push_back({u, v});
        return out;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // Checks symmetry, irreflexivity and membership bounds.
    void check_invariants() const {
        for (int v = 0; v < n_; ++v) {
            assert(adj_[v].universe() == n_);
            assert(!adj_[v].test(v) || !"irreflexivity violated");
            for (int u = adj_[v].first(); u >= 0; u = adj_[v].next(u))
                assert(adj_[u].test(v) || !"symmetry violated");
        }
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph make_empty(int n) { return Graph(n); }

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.check_invariants();
    return g;
}

inline Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.check_invariants();
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    g.check_invariants();
    return g;
}

// Perfect matching on 2n vertices with pairs (2k, 2k+1).
inline Graph make_matching(int n) {
    Graph g(2 * n);
    for (int k = 0; k < n; ++k) g.add_edge(2 * k, 2 * k + 1);
    g.check_invariants();
    return g;
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    c.check_invariants();
    return c;
}

// Cocktail party graph cp(n): complement of a perfect matching on 2n
// vertices; i ~ j unless {i,j} is a matched pair (2k, 2k+1).
inline Graph make_cocktail_party(int n) {
    Graph g(2 * n);
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) g.add_edge(u, v);
    g.check_invariants();
    return g;
}

// Deterministic uniform double in [0,1) from a 64-bit draw; avoids
// std::uniform_real_distribution, whose output is not portable.
inline double unit_draw(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

// Erdos-Renyi G(n,p); identical edge set for identical seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p) g.add_edge(u, v);
    g.check_invariants();
    return g;
}

// Vertices with empty neighborhood.
inline VertexSet isolated_vertices(const Graph& g) {
    VertexSet s(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).empty()) s.set(v);
    return s;
}

// Pairs {u,v} that are adjacent and share the same closed neighborhood.
inline std::vector<std::pair<int, int>> equivalent_vertices(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        VertexSet closed_u = g.neighbors(u);
        closed_u.set(u);
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            VertexSet closed_v = g.neighbors(v);
            closed_v.set(v);
            if (closed_u == closed_v) out.push_back({u, v});
        }
    }
    return out;
}

// Subgraph induced by keep; vertices renumbered in increasing order.
// old_ids, when given, receives the original id of each new vertex.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                              std::vector<int>* old_ids = nullptr) {
    assert(keep.universe() == g.vertex_count());
    std::vector<int> ids = keep.to_vector();
    std::vector<int> newid(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) newid[ids[i]] = int(i);
    Graph h(int(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const VertexSet nb = g.neighbors(ids[i]) & keep;
        for (int v = nb.next(ids[i]); v >= 0; v = nb.next(v))
            h.add_edge(int(i), newid[v]);
    }
    if (old_ids) *old_ids = std::move(ids);
    return h;
}

}  // namespace eclab
