#pragma once

#include <optional>
#include <vector>

#include "romancvd/graph.hpp"

namespace romancvd {

// Searches for a set S with |S| <= k_max whose removal leaves a cluster
// graph, by 3-way branching on an induced P3 (delete its first, middle or
// last vertex, in that order). The P3 branched on is the one with the
// lexicographically smallest sorted vertex triple, so the search tree and
// the returned set are deterministic. Returns a minimum-size set found by
// that tree, or nullopt if none exists within k_max. Worst case 3^k_max.
std::optional<std::vector<int>> find_cvd(const Graph& g, int k_max);

// True iff G minus s is a cluster graph.
bool verify_cvd(const Graph& g, const std::vector<int>& s);

}  // namespace romancvd
