#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "eclab/dimacs.hpp"
#include "eclab/graph.hpp"
#include "eclab/vertex_set.hpp"

using namespace eclab;

TEST_CASE("vertex set basic operations") {
    VertexSet s(70);
    REQUIRE(s.empty());
    REQUIRE(s.universe() == 70);
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(69);
    REQUIRE(s.count() == 4);
    REQUIRE(s.test(63));
    REQUIRE(s.test(64));
    REQUIRE_FALSE(s.test(1));
    s.reset(63);
    REQUIRE_FALSE(s.test(63));
    REQUIRE(s.to_vector() == std::vector<int>{0, 64, 69});
    REQUIRE(s.first() == 0);
    REQUIRE(s.next(0) == 64);
    REQUIRE(s.next(64) == 69);
    REQUIRE(s.next(69) == -1);
}

TEST_CASE("vertex set matches std::set under random operations") {
    std::mt19937_64 rng(12345);
    for (int universe : {1, 13, 64, 65, 130}) {
        VertexSet a(universe), b(universe);
        std::set<int> ra, rb;
        for (int step = 0; step < 400; ++step) {
            const int v = int(rng() % std::uint64_t(universe));
            switch (rng() % 4) {
                case 0: a.set(v); ra.insert(v); break;
                case 1: a.reset(v); ra.erase(v); break;
                case 2: b.set(v); rb.insert(v); break;
                default: b.reset(v); rb.erase(v); break;
            }
            std::set<int> runion, rinter, rdiff, rsym;
            std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(),
                           std::inserter(runion, runion.end()));
            std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                                  std::inserter(rinter, rinter.end()));
            std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                                std::inserter(rdiff, rdiff.end()));
            std::set_symmetric_difference(ra.begin(), ra.end(), rb.begin(),
                                          rb.end(), std::inserter(rsym, rsym.end()));
            auto as_vec = [](const std::set<int>& s) {
                return std::vector<int>(s.begin(), s.end());
            };
            REQUIRE((a | b).to_vector() == as_vec(runion));
            REQUIRE((a & b).to_vector() == as_vec(rinter));
            REQUIRE((a - b).to_vector() == as_vec(rdiff));
            REQUIRE((a ^ b).to_vector() == as_vec(rsym));
            REQUIRE(a.count() == int(ra.size()));
            REQUIRE(a.intersects(b) == !rinter.empty());
            REQUIRE(a.subset_of(b) == std::includes(rb.begin(), rb.end(),
                                                    ra.begin(), ra.end()));
        }
    }
}

TEST_CASE("vertex set complement trims to the universe") {
    VertexSet s(67);
    s.set(3);
    const VertexSet c = ~s;
    REQUIRE(c.count() == 66);
    REQUIRE_FALSE(c.test(3));
    REQUIRE((s | c) == VertexSet::full(67));
    REQUIRE((s & c).empty());
}

TEST_CASE("vertex set ordering is by packed value") {
    VertexSet a(8), b(8);
    a.set(0);  // {0} = value 1
    b.set(3);  // {3} = value 8
    REQUIRE(a < b);
    VertexSet c = VertexSet::of(8, {0, 3});
    REQUIRE(b < c);
    std::vector<VertexSet> v{c, a, b};
    std::sort(v.begin(), v.end());
    REQUIRE(v == std::vector<VertexSet>{a, b, c});
}

TEST_CASE("graph edges are undirected and deduplicated") {
    Graph g(5);
    g.add_edge(1, 3);
    g.add_edge(3, 1);
    REQUIRE(g.edge_count() == 1);
    REQUIRE(g.has_edge(1, 3));
    REQUIRE(g.has_edge(3, 1));
    REQUIRE(g.degree(1) == 1);
    REQUIRE_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    g.check_invariants();
}

TEST_CASE("edge list is lexicographically sorted") {
    Graph g(4);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(0, 1);
    const std::vector<Edge> e = g.edges();
    REQUIRE(e == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
}

TEST_CASE("generator sizes") {
    REQUIRE(make_complete(6).edge_count() == 15);
    REQUIRE(make_path(6).edge_count() == 5);
    REQUIRE(make_cycle(6).edge_count() == 6);
    REQUIRE(make_matching(4).edge_count() == 4);
    REQUIRE(make_matching(4).vertex_count() == 8);
    REQUIRE_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("cocktail party graph drops exactly the canonical pairs") {
    for (int n = 1; n <= 8; ++n) {
        const Graph g = make_cocktail_party(n);
        REQUIRE(g.vertex_count() == 2 * n);
        REQUIRE(g.edge_count() == 2 * n * (n - 1));
        for (int v = 0; v < 2 * n; ++v) REQUIRE(g.degree(v) == 2 * n - 2);
        for (int k = 0; k < n; ++k) REQUIRE_FALSE(g.has_edge(2 * k, 2 * k + 1));
        // complement is a perfect matching
        const Graph co = complement(g);
        REQUIRE(co.edge_count() == n);
        for (int v = 0; v < 2 * n; ++v) REQUIRE(co.degree(v) == 1);
    }
}

TEST_CASE("complement is an involution") {
    const Graph g = random_graph(9, 0.4, 99);
    REQUIRE(complement(complement(g)) == g);
    const Graph co = complement(g);
    REQUIRE(g.edge_count() + co.edge_count() == 9 * 8 / 2);
}

TEST_CASE("random graphs are deterministic in the seed") {
    const Graph a = random_graph(10, 0.5, 7);
    const Graph b = random_graph(10, 0.5, 7);
    const Graph c = random_graph(10, 0.5, 8);
    REQUIRE(a == b);
    REQUIRE(a != c);
    REQUIRE(random_graph(10, 0.0, 1).edge_count() == 0);
    REQUIRE(random_graph(10, 1.0, 1).edge_count() == 45);
    REQUIRE_THROWS_AS(random_graph(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("isolated and equivalent vertex detection") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    // vertex 3, 4 isolated; 0,1,2 form a triangle: all pairs equivalent
    REQUIRE(isolated_vertices(g).to_vector() == std::vector<int>{3, 4});
    const auto eq = equivalent_vertices(g);
    REQUIRE(eq == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    const Graph p4 = make_path(4);
    REQUIRE(equivalent_vertices(p4).empty());
    REQUIRE(isolated_vertices(p4).empty());

    // adjacent with identical closed neighborhoods through a third vertex
    Graph h(3);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(1, 2);
    REQUIRE(equivalent_vertices(h).size() == 3);
}

TEST_CASE("induced subgraph keeps adjacency and reports old ids") {
    const Graph g = make_cycle(5);
    VertexSet keep = VertexSet::of(5, {0, 1, 3});
    std::vector<int> old_ids;
    const Graph h = induced_subgraph(g, keep, &old_ids);
    REQUIRE(h.vertex_count() == 3);
    REQUIRE(old_ids == std::vector<int>{0, 1, 3});
    REQUIRE(h.has_edge(0, 1));   // cycle edge 0-1
    REQUIRE_FALSE(h.has_edge(0, 2));
    REQUIRE_FALSE(h.has_edge(1, 2));
    REQUIRE(h.edge_count() == 1);
}

TEST_CASE("dimacs round trip preserves random graphs") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + int(rng() % 12);
        const Graph g = random_graph(n, 0.4, rng());
        std::stringstream buffer;
        write_dimacs(buffer, g);
        const Graph back = read_dimacs(buffer);
        REQUIRE(back == g);
    }
}

TEST_CASE("dimacs reader accepts comments and 1-based ids") {
    std::istringstream in("c a small graph\np edge 3 2\ne 1 2\ne 2 3\n");
    const Graph g = read_dimacs(in);
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 2));
    REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("dimacs reader rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        REQUIRE_THROWS_AS(read_dimacs(in), std::runtime_error);
    };
    reject("e 1 2\n");                                   // edge before problem
    reject("p edge 3 1\np edge 3 1\ne 1 2\n");           // duplicate problem
    reject("p edge 3 1\ne 1 4\n");                       // id out of range
    reject("p edge 3 1\ne 0 1\n");                       // ids are 1-based
    reject("p edge 3 1\ne 2 2\n");                       // self loop
    reject("p edge 3 2\ne 1 2\ne 2 1\n");                // duplicate edge
    reject("p edge 3 2\ne 1 2\n");                       // count mismatch
    reject("p edge 3 1\nx 1 2\n");                       // unknown record
    reject("");                                          // missing problem
}
