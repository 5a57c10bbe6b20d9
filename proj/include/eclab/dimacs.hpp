#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "eclab/graph.hpp"

namespace eclab {

// DIMACS-like text format: "p edge <n> <m>" then m lines "e <u> <v>"
// with 1-based vertex ids; lines starting with 'c' are comments.

inline Graph read_dimacs(std::istream& in) {
    Graph g;
    bool have_problem = false;
    long declared_edges = 0, seen_edges = 0;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("dimacs line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (have_problem) fail("duplicate problem line");
            std::string kind;
            long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                fail("expected 'p edge <n> <m>'");
            g = Graph(int(n));
            declared_edges = m;
            have_problem = true;
        } else if (tag == "e") {
            if (!have_problem) fail("edge before problem line");
            long u = 0, v = 0;
            if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
                fail("vertex id out of range");
            if (u == v) fail("self-loop");
            if (g.has_edge(int(u - 1), int(v - 1))) fail("duplicate edge");
            g.add_edge(int(u - 1), int(v - 1));
            ++seen_edges;
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (!have_problem) throw std::runtime_error("dimacs: missing problem line");
    if (seen_edges != declared_edges)
        throw std::runtime_error("dimacs: declared " + std::to_string(declared_edges) +
                                 " edges, found " + std::to_string(seen_edges));
    return g;
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
}

inline Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_dimacs(in);
}

inline void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_dimacs(out, g);
}

}  // namespace eclab
