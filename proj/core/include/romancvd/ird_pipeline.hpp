#pragma once

#include "romancvd/rd_pipeline.hpp"

namespace romancvd {

// Guess state for the independent variant. Beyond the plain context, S1's
// clique neighborhood is deleted, so cliques shrink: survivors[i] holds what
// is left of clique i and deleted_by_s1[i] the vertices it lost to
// N(S1) minus N[S2] (those are forced to label 0 but are no longer adjacent
// to any S2 vertex, which is what the flag repair below compensates for).
struct IrdGuessContext {
    GuessContext base;
    std::vector<std::vector<int>> survivors;
    std::vector<std::vector<int>> deleted_by_s1;
};

// False iff some clique lies entirely inside N[S1] union N[S2] while one of
// its vertices has an S1-neighbor but no S2-neighbor: that vertex would be
// labeled 0 with every potential defender erased.
// Requires s1, s2 independent and s1 disjoint from N[s2].
bool check_guess_validity(const Graph& g, const ClusterDecomposition& decomp,
                          const std::vector<int>& s1, const std::vector<int>& s2);

IrdGuessContext make_ird_guess_context(const Graph& g, const ClusterDecomposition& decomp,
                                       std::vector<int> s1, std::vector<int> s2,
                                       std::optional<int32_t> budget);

// Flags surviving cliques 1 (single survivor) or 2 (two or more). A clique
// that lost a vertex to N(S1) minus N[S2] is forced to flag 2 regardless of
// survivor count: the lost vertex still needs a label-2 neighbor inside the
// clique, so the pay-1 option must be ruled out. Vanished cliques get flag 0
// with empty rho and produce no block. Throws when the guess is invalid.
CliqueClassification classify_surviving_cliques(const IrdGuessContext& ctx);

// Universe = residual_s; one block per surviving clique over its survivors
// in ascending order; flags from cls (only nonzero flags become blocks).
ScpInstance build_ird_disjoint_cluster(const Graph& g, const IrdGuessContext& ctx,
                                       const CliqueClassification& cls);

// As solve_rd, but S2 and S1 range over independent subsets only (dependent
// subsets are skipped without counting as work) and each guess is vetted by
// check_guess_validity before its instance is built.
SolveResult solve_ird(const Graph& g, const std::vector<int>& s, const SolveOptions& opts = {});

}  // namespace romancvd
