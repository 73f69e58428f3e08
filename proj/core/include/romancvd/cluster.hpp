#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "romancvd/graph.hpp"

namespace romancvd {

// Induced path a-b-c (b is the middle vertex, a-c is a non-edge).
struct InducedP3 {
    int a = -1, b = -1, c = -1;
};

// Raised when a graph expected to be a cluster graph is not; carries one
// induced P3 as evidence.
class not_cluster_error : public std::runtime_error {
public:
    explicit not_cluster_error(InducedP3 w)
        : std::runtime_error("not a cluster graph: induced path " + std::to_string(w.a) + "-" +
                             std::to_string(w.b) + "-" + std::to_string(w.c)),
          witness_(w) {}

    const InducedP3& witness() const { return witness_; }

private:
    InducedP3 witness_;
};

// A modulator S together with the clique components of G minus S.
// Cliques are ordered by their minimum vertex index, members ascending.
struct ClusterDecomposition {
    std::vector<int> cvd_set;
    std::vector<std::vector<int>> cliques;
    // Per vertex: clique index, or -1 for modulator vertices.
    std::vector<int> vertex_to_clique;
};

// True iff every component of g is complete (no induced P3).
bool is_cluster(const Graph& g);

// Decomposes G minus s into cliques. Throws not_cluster_error (with a P3
// witness) when some component of G minus s is not complete; throws
// std::invalid_argument when s contains an out-of-range vertex.
ClusterDecomposition clique_components(const Graph& g, const std::vector<int>& s);

}  // namespace romancvd
