#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "romancvd/cluster.hpp"
#include "romancvd/graph.hpp"
#include "romancvd/labeling.hpp"
#include "romancvd/scp.hpp"

namespace romancvd {

// One modulator guess: S2 is the hypothesized label-2 part of S, S1 the
// label-1 part chosen from S minus N[S2]. residual_s is what remains of S
// and must be dominated from the cliques; residual_budget may be negative,
// which marks the guess immediately infeasible in decision mode.
struct GuessContext {
    std::vector<int> s1, s2;
    std::vector<int> residual_s;
    std::optional<int32_t> residual_budget;
};

// Per clique: flag 0 when every vertex has an S2-neighbor, 1 when exactly
// one lacks one, 2 otherwise; rho is the vertex order used for the family
// blocks (the lone undominated vertex leads a flag-1 clique).
struct CliqueClassification {
    std::vector<int> flags;
    std::vector<std::vector<int>> rho;
};

struct SolveOptions {
    std::optional<int32_t> budget;
    int threads = 1;
};

struct SolveStats {
    // (S2, S1) pairs visited, including ones pruned before their DP runs
    uint64_t guesses_enumerated = 0;
    uint64_t scp_cells = 0;
    // times a surviving singleton clique was forced to flag 2 because a
    // sibling vertex fell to N(S1) minus N[S2]
    uint64_t gap_repair_engaged = 0;
};

struct SolveResult {
    // optimum weight; kInfiniteValue when decision-mode pruning left no
    // evaluated guess (labeling is then empty)
    int32_t value = kInfiniteValue;
    RomanLabeling labeling;
    std::vector<int> s1, s2;       // winning guess
    std::optional<bool> feasible;  // set iff a budget was given
    SolveStats stats;
};

// Validates s1/s2 against the decomposition (subsets of S, disjoint, s1
// clear of N[s2]) and assembles the residuals.
GuessContext make_guess_context(const Graph& g, const ClusterDecomposition& decomp,
                                std::vector<int> s1, std::vector<int> s2,
                                std::optional<int32_t> budget);

CliqueClassification classify_cliques(const Graph& g, const ClusterDecomposition& decomp,
                                      const std::vector<int>& s2);

// Universe = residual_s; one block per clique in rho order with the sets
// N(v) cap residual_s; flags from cls; budget = residual_budget.
ScpInstance build_rd_disjoint_cluster(const Graph& g, const ClusterDecomposition& decomp,
                                      const GuessContext& ctx, const CliqueClassification& cls);

// Enumerates S2 over subsets of s ascending by subset index, S1 over
// subsets of S minus N[S2] likewise; equal-weight optima resolve to the
// smallest (S2 index, S1 index), independent of opts.threads.
SolveResult solve_rd(const Graph& g, const std::vector<int>& s, const SolveOptions& opts = {});

}  // namespace romancvd
