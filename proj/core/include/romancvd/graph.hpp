#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace romancvd {

// Thrown by the text parsers; line is 1-based within the parsed text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Undirected simple graph on vertex ids 0..n-1. Immutable after construction.
// Adjacency lists are sorted ascending; parallel edges are collapsed and
// self loops rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> names = {});

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Original token names when the graph was parsed in named mode,
    // empty otherwise.
    const std::vector<std::string>& names() const { return names_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
};

// Edge list format. Lines starting with "c" are comments. A header line
// "p <n> <m>" fixes the vertex count and declares the edge count; it is
// followed by m lines "e <u> <v>" with 0-based endpoints. Without a header
// every line is either "u v" with integer endpoints or a pair of arbitrary
// name tokens; names are assigned ids in order of first appearance.
Graph parse_graph(const std::string& text);

// Inverse of parse_graph for the headered form, deterministic: header line,
// then edges sorted by (u, v).
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);

}  // namespace romancvd
