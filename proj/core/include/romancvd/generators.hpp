#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "romancvd/graph.hpp"

namespace romancvd {

struct GeneratedInstance {
    Graph graph;
    std::vector<int> cvd_set;  // the planted modulator, valid by construction
};

// Disjoint cliques plus k modulator vertices. Clique i occupies consecutive
// vertex ids; the modulator takes the last k ids. Clique sizes are drawn
// uniformly from clique_size_range, then every modulator-internal pair and
// every modulator-to-clique pair becomes an edge independently with
// probability edge_prob. All draws come from one SplitMix64 stream seeded
// with seed, in that fixed order, so output is byte-reproducible.
GeneratedInstance gen_cluster_plus_k(int num_cliques, std::pair<int, int> clique_size_range,
                                     int k, double edge_prob, uint64_t seed);

struct ReductionResult {
    Graph graph;
    // The clique side: simultaneously a CVD set and a vertex cover of graph.
    std::vector<int> universe_vertices;
};

// Split graph encoding of a hitting set instance: universe elements become a
// clique on ids 0..universe_size-1; each set S_j contributes two vertices
// adjacent to exactly the elements of S_j. The minimum Roman domination
// weight of the output is twice the minimum hitting set size whenever the
// family is non-empty. Empty sets are rejected: their two vertices would be
// isolated and break that correspondence.
ReductionResult hitting_set_to_rd_instance(int universe_size,
                                           const std::vector<std::vector<int>>& sets);

// One set per line, space-separated element indices; blank and "c" comment
// lines are skipped.
std::vector<std::vector<int>> parse_hitting_set_spec(const std::string& text);

}  // namespace romancvd
