#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "eclab/graph.hpp"
#include "eclab/vertex_set.hpp"

namespace eclab {

// GF(2) rank of the bipartite adjacency submatrix with rows S and
// columns V\S. Rows are packed words; elimination keeps one basis row
// per pivot bit.
inline int cut_rank(const Graph& g, const VertexSet& s) {
    assert(s.universe() == g.vertex_count());
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<int> pivot;
    int rank = 0;
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet row_set = g.neighbors(u) - s;
        std::vector<std::uint64_t> row = row_set.words();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int p = pivot[b];
            if ((row[p >> 6] >> (p & 63)) & 1u)
                for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= basis[b][w];
        }
        int low = -1;
        for (std::size_t w = 0; w < row.size() && low < 0; ++w)
            if (row[w]) low = int(w * 64) + std::countr_zero(row[w]);
        if (low >= 0) {
            basis.push_back(std::move(row));
            pivot.push_back(low);
            ++rank;
        }
    }
    return rank;
}

// Memoizing wrapper; the host graph must outlive the oracle.
class CutRankOracle {
public:
    explicit CutRankOracle(const Graph& g) : host_(&g) {}

    const Graph& host() const { return *host_; }

    int rank(const VertexSet& s) const {
        assert(s.universe() == host_->vertex_count());
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        const int r = cut_rank(*host_, s);
        memo_.emplace(s, r);
        return r;
    }

    int operator()(const VertexSet& s) const { return rank(s); }

    std::size_t memo_size() const { return memo_.size(); }

private:
    const Graph* host_;
    mutable std::unordered_map<VertexSet, int, VertexSetHash> memo_;
};

}  // namespace eclab
