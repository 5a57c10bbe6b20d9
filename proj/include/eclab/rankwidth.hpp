#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eclab/cut_rank.hpp"
#include "eclab/graph.hpp"

namespace eclab {

constexpr int kExactRankwidthGuard = 16;   // 3^n subset DP
constexpr int kLinearRankwidthGuard = 24;  // 2^n order DP
constexpr int kExactRankwidthHardCap = 24;

// Unrooted tree with leaves bijecting to V and internal nodes of
// degree 3 (for n >= 3). leaf_vertex[i] is the graph vertex at leaf
// node i, or -1 for internal nodes.
struct BranchDecomposition {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaf_vertex;
    int width = 0;
};

struct RankwidthResult {
    int width = 0;
    BranchDecomposition decomposition;
    double wall_time_s = 0.0;
};

namespace detail {

// Rank over GF(2) of rows `mask`, columns outside `mask`, with 32-bit
// adjacency rows.
inline int rank_u32(const std::vector<std::uint32_t>& adj, std::uint32_t mask,
                    std::uint32_t full) {
    std::uint32_t piv[32] = {};
    int rank = 0;
    const std::uint32_t outside = full & ~mask;
    for (std::uint32_t rest = mask; rest;) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint32_t row = adj[u] & outside;
        while (row) {
            const int b = std::countr_zero(row);
            if (piv[b]) {
                row ^= piv[b];
            } else {
                piv[b] = row;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= std::uint32_t{1} << e.v;
        adj[e.v] |= std::uint32_t{1} << e.u;
    }
    return adj;
}

// Caterpillar over `order`: width is the max over prefix cuts and
// single-leaf cuts.
inline int order_width(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    int width = 0;
    VertexSet prefix(n);
    for (int i = 0; i + 1 < n; ++i) {
        prefix.set(order[i]);
        width = std::max(width, cut_rank(g, prefix));
    }
    for (int v = 0; v < n; ++v) {
        VertexSet single(n);
        single.set(v);
        width = std::max(width, cut_rank(g, single));
    }
    return width;
}

// Leaves in `order` hang off a spine; spine edge j separates the first
// j+2 leaves from the rest.
inline BranchDecomposition caterpillar_decomposition(const Graph& g,
                                                     const std::vector<int>& order) {
    const int n = g.vertex_count();
    BranchDecomposition d;
    d.width = order_width(g, order);
    if (n == 0) return d;
    d.node_count = n;
    d.leaf_vertex.assign(n, -1);
    for (int i = 0; i < n; ++i) d.leaf_vertex[i] = order[i];
    if (n == 1) return d;
    if (n == 2) {
        d.edges.push_back({0, 1});
        return d;
    }
    const int spine = n - 2;
    d.node_count = n + spine;
    d.leaf_vertex.resize(n + spine, -1);
    auto s = [n](int j) { return n + j; };
    d.edges.push_back({s(0), 0});
    d.edges.push_back({s(0), 1});
    for (int j = 1; j <= spine - 1; ++j) d.edges.push_back({s(j), j + 1});
    for (int j = 0; j + 1 < spine; ++j) d.edges.push_back({s(j), s(j + 1)});
    d.edges.push_back({s(spine - 1), n - 1});
    return d;
}

}  // namespace detail

// Exact rankwidth by subset DP over all 3^n splits:
//   cost(S) = rho(S) for |S| = 1,
//   cost(S) = min over bipartitions (A, S\A) of
//             max(rho(A), rho(S\A), cost(A), cost(S\A)),
// with all cut-ranks taken against the whole graph. cost(V) ranges
// exactly over unrooted ternary decompositions.
inline RankwidthResult exact_rankwidth(const Graph& g, int max_n = kExactRankwidthGuard) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (max_n > kExactRankwidthHardCap) max_n = kExactRankwidthHardCap;
    if (n > max_n)
        throw guard_error("exact rankwidth guard: " + std::to_string(n) +
                          " vertices exceeds limit " + std::to_string(max_n));

    RankwidthResult result;
    if (n <= 1) {
        if (n == 1) {
            result.decomposition.node_count = 1;
            result.decomposition.leaf_vertex = {0};
        }
        result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }

    const std::uint32_t full =
        n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    const std::vector<std::uint32_t> adj = detail::adjacency_masks(g);
    std::vector<std::uint8_t> rank(std::size_t(full) + 1, 0);
    std::vector<std::uint8_t> cost(std::size_t(full) + 1, 0);
    std::vector<std::uint32_t> split(std::size_t(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        rank[mask] = std::uint8_t(detail::rank_u32(adj, mask, full));

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) == 1) {
            cost[mask] = rank[mask];
            continue;
        }
        const std::uint32_t lowbit = mask & (~mask + 1);
        int best = n + 1;
        std::uint32_t best_a = 0;
        // Proper submasks through the lowest vertex; the other side is
        // visited implicitly.
        for (std::uint32_t a = (mask - 1) & mask; a; a = (a - 1) & mask) {
            if (!(a & lowbit)) continue;
            const std::uint32_t b = mask ^ a;
            const int w = std::max({int(rank[a]), int(rank[b]),
                                    int(cost[a]), int(cost[b])});
            if (w < best) {
                best = w;
                best_a = a;
            }
        }
        cost[mask] = std::uint8_t(best);
        split[mask] = best_a;
    }

    result.width = cost[full];

    // Rebuild the certificate from recorded splits. Subdividing the
    // root edge is undone by joining the two top subtrees directly.
    BranchDecomposition& d = result.decomposition;
    d.width = result.width;
    std::vector<int> node_of_leaf(n, -1);
    auto new_node = [&](int vertex) {
        d.leaf_vertex.push_back(vertex);
        return d.node_count++;
    };
    auto build = [&](auto&& self, std::uint32_t mask) -> int {
        if (std::popcount(mask) == 1) return new_node(std::countr_zero(mask));
        const std::uint32_t a = split[mask];
        const int na = self(self, a);
        const int nb = self(self, mask ^ a);
        const int x = new_node(-1);
        d.edges.push_back({x, na});
        d.edges.push_back({x, nb});
        return x;
    };
    const std::uint32_t top_a = split[full];
    const int ra = build(build, top_a);
    const int rb = build(build, full ^ top_a);
    d.edges.push_back({ra, rb});
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

struct LinearRankwidthResult {
    int width = 0;
    std::vector<int> order;
    double wall_time_s = 0.0;
};

// Linear rankwidth over vertex orders:
//   h(S) = max(rho(S) for S not in {empty, V}, min over v of h(S\{v})),
// answer h(V) with a realizing order.
inline LinearRankwidthResult linear_rankwidth(const Graph& g,
                                              int max_n = kLinearRankwidthGuard) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (max_n > 26) max_n = 26;
    if (n > max_n)
        throw guard_error("linear rankwidth guard: " + std::to_string(n) +
                          " vertices exceeds limit " + std::to_string(max_n));

    LinearRankwidthResult result;
    if (n == 0) {
        result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }
    const std::uint32_t full =
        n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    const std::vector<std::uint32_t> adj = detail::adjacency_masks(g);
    std::vector<std::uint8_t> h(std::size_t(full) + 1, 0);
    std::vector<std::uint8_t> last(std::size_t(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int inner = n + 1;
        int pick = -1;
        for (std::uint32_t rest = mask; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int hv = h[mask ^ (std::uint32_t{1} << v)];
            if (hv < inner) {
                inner = hv;
                pick = v;
            }
        }
        const int cut = mask == full ? 0 : detail::rank_u32(adj, mask, full);
        h[mask] = std::uint8_t(std::max(cut, inner));
        last[mask] = std::uint8_t(pick);
    }
    result.width = h[full];
    result.order.assign(n, -1);
    std::uint32_t mask = full;
    for (int i = n - 1; i >= 0; --i) {
        const int v = last[mask];
        result.order[i] = v;
        mask ^= std::uint32_t{1} << v;
    }
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// Caterpillar upper bound for instances beyond the exact guards:
// seeded restarts, each growing an order that greedily minimizes the
// next prefix cut (ties to the lowest id).
inline RankwidthResult greedy_rankwidth_upper_bound(const Graph& g,
                                                    std::uint64_t seed,
                                                    int restarts = 8) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    RankwidthResult result;
    if (n == 0) {
        result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }
    std::mt19937_64 rng(seed);
    CutRankOracle oracle(g);
    std::vector<int> best_order;
    int best_width = -1;
    for (int attempt = 0; attempt < std::max(restarts, 1); ++attempt) {
        std::vector<int> order;
        order.reserve(n);
        VertexSet prefix(n);
        order.push_back(int(rng() % std::uint64_t(n)));
        prefix.set(order[0]);
        int width = oracle(prefix);
        while (int(order.size()) < n) {
            int pick = -1, pick_cut = -1;
            for (int v = 0; v < n; ++v) {
                if (prefix.test(v)) continue;
                VertexSet next = prefix;
                next.set(v);
                const int cut = int(order.size()) + 1 == n ? 0 : oracle(next);
                if (pick < 0 || cut < pick_cut) {
                    pick = v;
                    pick_cut = cut;
                }
            }
            order.push_back(pick);
            prefix.set(pick);
            width = std::max(width, pick_cut);
        }
        if (best_width < 0 || width < best_width) {
            best_width = width;
            best_order = order;
        }
    }
    result.decomposition = detail::caterpillar_decomposition(g, best_order);
    result.width = result.decomposition.width;
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

struct DecompositionCheck {
    int width = 0;
    bool matches_claimed = false;
};

// Recompute every tree-edge cut-rank from scratch and compare with the
// stored width. Throws on a malformed tree.
inline DecompositionCheck verify_branch_decomposition(const Graph& g,
                                                      const BranchDecomposition& d) {
    const int n = g.vertex_count();
    const int nodes = d.node_count;
    auto malformed = [](const std::string& why) {
        throw std::invalid_argument("malformed branch decomposition: " + why);
    };

    if (int(d.leaf_vertex.size()) != nodes) malformed("leaf_vertex size mismatch");
    if (n == 0) {
        if (nodes != 0 || !d.edges.empty()) malformed("expected empty tree");
        return {0, d.width == 0};
    }
    if (int(d.edges.size()) != nodes - 1) malformed("edge count is not nodes-1");

    std::vector<std::vector<int>> adj(nodes);
    for (const auto& [a, b] : d.edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b)
            malformed("edge endpoint out of range");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> seen_vertex(n, 0);
    for (int i = 0; i < nodes; ++i) {
        const int v = d.leaf_vertex[i];
        if (v >= 0) {
            if (v >= n) malformed("leaf labels a nonexistent vertex");
            ++seen_vertex[v];
            if (nodes > 1 && adj[i].size() != 1) malformed("leaf node degree != 1");
        } else if (n >= 3 && adj[i].size() != 3) {
            malformed("internal node degree != 3");
        }
    }
    for (int v = 0; v < n; ++v)
        if (seen_vertex[v] != 1) malformed("missing or repeated leaf vertex");

    // Connectivity; with the edge count checked this also rules out cycles.
    std::vector<char> reached(nodes, 0);
    std::vector<int> stack = {0};
    reached[0] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!reached[y]) {
                reached[y] = 1;
                stack.push_back(y);
            }
    }
    for (int i = 0; i < nodes; ++i)
        if (!reached[i]) malformed("tree is disconnected");

    CutRankOracle oracle(g);
    int width = 0;
    for (const auto& [a, b] : d.edges) {
        // Leaves on the a-side of edge (a,b).
        VertexSet side(n);
        std::vector<int> dfs = {a};
        std::vector<char> visited(nodes, 0);
        visited[a] = 1;
        visited[b] = 1;
        while (!dfs.empty()) {
            const int x = dfs.back();
            dfs.pop_back();
            if (d.leaf_vertex[x] >= 0) side.set(d.leaf_vertex[x]);
            for (int y : adj[x])
                if (!visited[y]) {
                    visited[y] = 1;
                    dfs.push_back(y);
                }
        }
        width = std::max(width, oracle(side));
    }
    return {width, width == d.width};
}

struct ComplementGapReport {
    int rw_graph = 0;
    int rw_complement = 0;
    int gap = 0;
    bool within_one = false;
};

// Both exact rankwidths plus the |rw(G) - rw(co-G)| <= 1 assertion.
inline ComplementGapReport complement_gap_check(const Graph& g,
                                                int max_n = kExactRankwidthGuard) {
    ComplementGapReport rep;
    rep.rw_graph = exact_rankwidth(g, max_n).width;
    rep.rw_complement = exact_rankwidth(complement(g), max_n).width;
    rep.gap = std::abs(rep.rw_graph - rep.rw_complement);
    rep.within_one = rep.gap <= 1;
    return rep;
}

}  // namespace eclab
