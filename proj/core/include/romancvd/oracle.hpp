#pragma once

#include "romancvd/graph.hpp"
#include "romancvd/labeling.hpp"

namespace romancvd {

struct OracleResult {
    int32_t value = 0;
    RomanLabeling labeling;
};

// Exhaustive reference solvers. They enumerate all 3^n labelings by base-3
// counting over vertex indices (last index fastest), so the returned witness
// is the lexicographically smallest optimum. Their only virtue is being
// obviously correct; cap guards against accidental blowup and is raised
// knowingly by callers that can afford it.
OracleResult brute_force_rd(const Graph& g, int cap = 14);
OracleResult brute_force_ird(const Graph& g, int cap = 14);

// Minimum cardinality subset of 0..universe_size-1 meeting every set, by
// subset enumeration. Throws when universe_size exceeds cap or a set is
// empty (nothing can hit it).
int brute_force_hitting_set(int universe_size, const std::vector<std::vector<int>>& sets,
                            int cap = 20);

}  // namespace romancvd
