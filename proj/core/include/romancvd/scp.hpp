#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace romancvd {

// Sentinel strictly greater than any attainable objective (2m + q at most);
// arithmetic on it saturates instead of overflowing.
inline constexpr int32_t kInfiniteValue = INT32_MAX / 4;

// Set cover over an ordered family S_1..S_m partitioned into consecutive
// blocks, each block carrying a flag. A selection X must cover the universe
// and hit every flag-2 block; its cost is 2|X| plus 1 per flag-1 block
// disjoint from X. The independent variant additionally allows at most one
// pick per block (flags restricted to {1,2}).
class ScpInstance {
public:
    // family sets are bitmasks over universe elements 0..universe_size-1;
    // block_sizes partitions the family into consecutive runs.
    ScpInstance(int universe_size, std::vector<uint32_t> family, std::vector<int> block_sizes,
                std::vector<int> block_flags, std::optional<int32_t> budget = std::nullopt);

    int universe_size() const { return universe_size_; }
    uint32_t universe_mask() const {
        return universe_size_ == 0 ? 0u : (~0u >> (32 - universe_size_));
    }
    int num_sets() const { return static_cast<int>(family_.size()); }
    int num_blocks() const { return static_cast<int>(block_sizes_.size()); }
    const std::vector<uint32_t>& family() const { return family_; }
    const std::vector<int>& block_sizes() const { return block_sizes_; }
    const std::vector<int>& block_flags() const { return block_flags_; }
    std::optional<int32_t> budget() const { return budget_; }

    // First family index of block b, and the block containing family index j.
    int block_start(int b) const { return block_start_[b]; }
    int block_of(int j) const { return block_of_[j]; }

    bool has_flag0_block() const;

private:
    int universe_size_;
    std::vector<uint32_t> family_;
    std::vector<int> block_sizes_;
    std::vector<int> block_flags_;
    std::optional<int32_t> budget_;
    std::vector<int> block_start_;
    std::vector<int> block_of_;
};

struct DpSolution {
    int32_t value = kInfiniteValue;
    std::vector<int> witness;      // ascending family indices
    std::optional<bool> feasible;  // set iff the instance has a budget or value is infinite
    uint64_t cells = 0;            // DP cells evaluated
};

// Subset DP over 2^universe states, streaming one family index at a time.
// Witness reconstruction retraces recorded argmin decisions, preferring
// skip over pick on ties.
DpSolution solve_scp(const ScpInstance& inst);

// Same DP with the one-pick-per-block rule: a pick at family index j jumps
// the state to the last index of the previous block, so no second pick in
// j's block can follow. Rejects instances with a flag-0 block.
DpSolution solve_iscp(const ScpInstance& inst);

// Value-only fast paths (no decision tracking, no witness allocation).
int32_t scp_optimum_value(const ScpInstance& inst, uint64_t& cells);
int32_t iscp_optimum_value(const ScpInstance& inst, uint64_t& cells);

// 2|chosen| + number of flag-1 blocks disjoint from chosen. Does not check
// validity of the selection.
int32_t scp_objective(const ScpInstance& inst, const std::vector<int>& chosen);

// Coverage plus every flag-2 block hit.
bool scp_selection_valid(const ScpInstance& inst, const std::vector<int>& chosen);

// scp_selection_valid plus at most one pick per block and exactly one per
// flag-2 block.
bool iscp_selection_valid(const ScpInstance& inst, const std::vector<int>& chosen);

// Line-oriented text form for fixtures: "u <universe size>", optional
// "budget <int>", then per block one "block <flag>" line followed by one
// "set <element indices...>" line per family member.
std::string serialize_scp(const ScpInstance& inst);
ScpInstance parse_scp(const std::string& text);

}  // namespace romancvd
