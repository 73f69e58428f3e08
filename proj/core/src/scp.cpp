#include "romancvd/scp.hpp"

#include <algorithm>
#include <sstream>

#include "romancvd/graph.hpp"

namespace romancvd {

ScpInstance::ScpInstance(int universe_size, std::vector<uint32_t> family,
                         std::vector<int> block_sizes, std::vector<int> block_flags,
                         std::optional<int32_t> budget)
    : universe_size_(universe_size),
      family_(std::move(family)),
      block_sizes_(std::move(block_sizes)),
      block_flags_(std::move(block_flags)),
      budget_(budget) {
    if (universe_size_ < 0 || universe_size_ > 25)
        throw std::invalid_argument("universe size must be in [0, 25], got " +
                                    std::to_string(universe_size_));
    if (block_sizes_.size() != block_flags_.size())
        throw std::invalid_argument("block size and flag lists differ in length");
    const uint32_t umask = universe_mask();
    for (uint32_t s : family_)
        if ((s & ~umask) != 0) throw std::invalid_argument("family set exceeds universe");
    long long covered = 0;
    for (size_t b = 0; b < block_sizes_.size(); ++b) {
        if (block_sizes_[b] <= 0)
            throw std::invalid_argument("block " + std::to_string(b) + " is empty");
        if (block_flags_[b] < 0 || block_flags_[b] > 2)
            throw std::invalid_argument("block flag out of range {0,1,2}: " +
                                        std::to_string(block_flags_[b]));
        covered += block_sizes_[b];
    }
    if (covered != static_cast<long long>(family_.size()))
        throw std::invalid_argument("block sizes sum to " + std::to_string(covered) +
                                    ", family has " + std::to_string(family_.size()));
    if (budget_ && *budget_ < 0) throw std::invalid_argument("budget must be nonnegative");

    block_start_.resize(block_sizes_.size());
    block_of_.resize(family_.size());
    int at = 0;
    for (size_t b = 0; b < block_sizes_.size(); ++b) {
        block_start_[b] = at;
        for (int i = 0; i < block_sizes_[b]; ++i) block_of_[at++] = static_cast<int>(b);
    }
}

bool ScpInstance::has_flag0_block() const {
    return std::find(block_flags_.begin(), block_flags_.end(), 0) != block_flags_.end();
}

namespace {

inline int32_t addv(int32_t v, int32_t c) { return std::min(v + c, kInfiniteValue); }

// One decision bit per (set index, promise, state): 1 = the argmin picked
// the set, 0 = it skipped (or paid a flag-1 charge). Skip wins ties.
struct DecisionBits {
    std::vector<uint64_t> words;
    int ubits = 0;

    void init(int m, int ubits_) {
        ubits = ubits_;
        words.assign(((static_cast<size_t>(m) * 3) << ubits) / 64 + 1, 0);
    }
    void set(int j, int b, uint32_t w) {
        size_t idx = ((static_cast<size_t>(j) * 3 + static_cast<size_t>(b)) << ubits) | w;
        words[idx >> 6] |= uint64_t(1) << (idx & 63);
    }
    bool get(int j, int b, uint32_t w) const {
        size_t idx = ((static_cast<size_t>(j) * 3 + static_cast<size_t>(b)) << ubits) | w;
        return (words[idx >> 6] >> (idx & 63)) & 1;
    }
};

void finish_solution(const ScpInstance& inst, DpSolution& out) {
    if (out.value >= kInfiniteValue) {
        out.value = kInfiniteValue;
        out.witness.clear();
        out.feasible = false;
    } else if (inst.budget()) {
        out.feasible = out.value <= *inst.budget();
    }
}

// Streams the promise-indexed layers over family indices. The promise b of a
// cell is what the current block will be charged if none of its sets is
// picked; it is settled against the block's actual flag when the next block
// begins. A pick voids the charge (prior promise 0) and removes the picked
// set from the remaining state.
DpSolution run_scp(const ScpInstance& inst, bool track) {
    DpSolution out;
    const int m = inst.num_sets();
    const int q = inst.num_blocks();
    const int U = inst.universe_size();
    const uint32_t full = inst.universe_mask();
    const size_t nw = size_t(1) << U;
    const auto& sets = inst.family();
    const auto& flags = inst.block_flags();

    if (m == 0) {
        out.value = (full == 0) ? 0 : kInfiniteValue;
        finish_solution(inst, out);
        return out;
    }

    std::vector<int32_t> prev(3 * nw), cur(3 * nw);
    DecisionBits bits;
    if (track) bits.init(m, U);

    for (int b = 0; b < 3; ++b) {
        int32_t* row = prev.data() + static_cast<size_t>(b) * nw;
        row[0] = b;
        for (uint32_t w = 1; w < nw; ++w) row[w] = ((w & ~sets[0]) == 0) ? 2 : kInfiniteValue;
    }
    out.cells += 3 * nw;

    for (int j = 1; j < m; ++j) {
        const uint32_t s = sets[j];
        const int x = inst.block_of(j);
        if (inst.block_start(x) != j) {
            const int32_t* p0 = prev.data();
            for (int b = 0; b < 3; ++b) {
                const int32_t* pb = prev.data() + static_cast<size_t>(b) * nw;
                int32_t* row = cur.data() + static_cast<size_t>(b) * nw;
                for (uint32_t w = 0; w < nw; ++w) {
                    int32_t pick = addv(p0[w & ~s], 2);
                    int32_t skip = pb[w];
                    if (pick < skip) {
                        row[w] = pick;
                        if (track) bits.set(j, b, w);
                    } else {
                        row[w] = skip;
                    }
                }
            }
        } else {
            // block boundary: settle the previous block's promise at its flag
            const int32_t* pf = prev.data() + static_cast<size_t>(flags[x - 1]) * nw;
            int32_t* r0 = cur.data();
            int32_t* r1 = cur.data() + nw;
            int32_t* r2 = cur.data() + 2 * nw;
            for (uint32_t w = 0; w < nw; ++w) {
                const int32_t pick = addv(pf[w & ~s], 2);
                const int32_t stay = pf[w];
                if (pick < stay) {
                    r0[w] = pick;
                    if (track) bits.set(j, 0, w);
                } else {
                    r0[w] = stay;
                }
                const int32_t pay = addv(stay, 1);
                if (pick < pay) {
                    r1[w] = pick;
                    if (track) bits.set(j, 1, w);
                } else {
                    r1[w] = pay;
                }
                r2[w] = pick;  // flag-2 promise forces a pick
                if (track) bits.set(j, 2, w);
            }
        }
        out.cells += 3 * nw;
        std::swap(prev, cur);
    }

    out.value = prev[(static_cast<size_t>(flags[q - 1]) << U) | full];
    finish_solution(inst, out);
    if (out.value >= kInfiniteValue || !track) return out;

    int j = m - 1;
    int b = flags[q - 1];
    uint32_t w = full;
    while (j >= 1) {
        const int x = inst.block_of(j);
        const bool first = inst.block_start(x) == j;
        if (bits.get(j, b, w)) {
            out.witness.push_back(j);
            w &= ~sets[j];
            b = first ? flags[x - 1] : 0;
        } else if (first) {
            b = flags[x - 1];
        }
        --j;
    }
    // base cell: value 2 means S_1 was picked, explicitly (w nonzero) or as
    // the implicit hit of a flag-2 promise
    if (w != 0 || b == 2) out.witness.push_back(0);
    std::reverse(out.witness.begin(), out.witness.end());
    return out;
}

// Variant with at most one pick per block: a pick of set j is charged
// against the layer at the end of j's previous block, so no state with an
// earlier pick in j's own block can precede it. Promises range over {1,2}.
DpSolution run_iscp(const ScpInstance& inst, bool track) {
    if (inst.has_flag0_block())
        throw std::invalid_argument("independent variant requires block flags in {1,2}");

    DpSolution out;
    const int m = inst.num_sets();
    const int q = inst.num_blocks();
    const int U = inst.universe_size();
    const uint32_t full = inst.universe_mask();
    const size_t nw = size_t(1) << U;
    const auto& sets = inst.family();
    const auto& flags = inst.block_flags();

    if (m == 0) {
        out.value = (full == 0) ? 0 : kInfiniteValue;
        finish_solution(inst, out);
        return out;
    }

    const int bs0 = inst.block_sizes()[0];

    // Base layer spans the whole first block: a state is reachable iff some
    // single set of the block covers it. base_cover keeps the smallest such
    // index for the retrace.
    std::vector<int32_t> base_cover(nw, -1);
    for (int i = 0; i < bs0; ++i) {
        uint32_t sub = sets[i];
        while (true) {
            if (base_cover[sub] < 0) base_cover[sub] = i;
            if (sub == 0) break;
            sub = (sub - 1) & sets[i];
        }
    }

    std::vector<int32_t> prev(3 * nw), cur(3 * nw), boundary;
    DecisionBits bits;
    if (track) bits.init(m, U);

    for (int b = 1; b <= 2; ++b) {
        int32_t* row = prev.data() + static_cast<size_t>(b) * nw;
        row[0] = b;
        for (uint32_t w = 1; w < nw; ++w) row[w] = base_cover[w] >= 0 ? 2 : kInfiniteValue;
    }
    out.cells += 2 * nw;
    boundary = prev;

    for (int j = bs0; j < m; ++j) {
        const uint32_t s = sets[j];
        const int x = inst.block_of(j);
        const bool first = inst.block_start(x) == j;
        if (first) boundary = prev;  // layer at the end of block x-1
        const int32_t* bf = boundary.data() + (static_cast<size_t>(flags[x - 1]) << U);
        int32_t* r1 = cur.data() + nw;
        int32_t* r2 = cur.data() + 2 * nw;
        if (first) {
            for (uint32_t w = 0; w < nw; ++w) {
                const int32_t pick = addv(bf[w & ~s], 2);
                const int32_t pay = addv(bf[w], 1);
                if (pick < pay) {
                    r1[w] = pick;
                    if (track) bits.set(j, 1, w);
                } else {
                    r1[w] = pay;
                }
                r2[w] = pick;
                if (track) bits.set(j, 2, w);
            }
        } else {
            const int32_t* p1 = prev.data() + nw;
            const int32_t* p2 = prev.data() + 2 * nw;
            for (uint32_t w = 0; w < nw; ++w) {
                const int32_t pick = addv(bf[w & ~s], 2);
                if (pick < p1[w]) {
                    r1[w] = pick;
                    if (track) bits.set(j, 1, w);
                } else {
                    r1[w] = p1[w];
                }
                if (pick < p2[w]) {
                    r2[w] = pick;
                    if (track) bits.set(j, 2, w);
                } else {
                    r2[w] = p2[w];
                }
            }
        }
        out.cells += 2 * nw;
        std::swap(prev, cur);
    }

    out.value = prev[(static_cast<size_t>(flags[q - 1]) << U) | full];
    finish_solution(inst, out);
    if (out.value >= kInfiniteValue || !track) return out;

    int j = m - 1;
    int b = flags[q - 1];
    uint32_t w = full;
    while (j >= bs0) {
        const int x = inst.block_of(j);
        if (bits.get(j, b, w)) {
            out.witness.push_back(j);
            w &= ~sets[j];
            b = flags[x - 1];
            j = inst.block_start(x) - 1;  // no second pick in this block
        } else if (inst.block_start(x) == j) {
            b = flags[x - 1];
            --j;
        } else {
            --j;
        }
    }
    if (w != 0) {
        out.witness.push_back(base_cover[w]);
    } else if (b == 2) {
        out.witness.push_back(0);
    }
    std::reverse(out.witness.begin(), out.witness.end());
    return out;
}

}  // namespace

DpSolution solve_scp(const ScpInstance& inst) { return run_scp(inst, true); }

DpSolution solve_iscp(const ScpInstance& inst) { return run_iscp(inst, true); }

int32_t scp_optimum_value(const ScpInstance& inst, uint64_t& cells) {
    DpSolution s = run_scp(inst, false);
    cells += s.cells;
    return s.value;
}

int32_t iscp_optimum_value(const ScpInstance& inst, uint64_t& cells) {
    DpSolution s = run_iscp(inst, false);
    cells += s.cells;
    return s.value;
}

int32_t scp_objective(const ScpInstance& inst, const std::vector<int>& chosen) {
    std::vector<char> touched(inst.num_blocks(), 0);
    for (int j : chosen) {
        if (j < 0 || j >= inst.num_sets())
            throw std::invalid_argument("selection index out of range: " + std::to_string(j));
        touched[inst.block_of(j)] = 1;
    }
    int32_t v = 2 * static_cast<int32_t>(chosen.size());
    for (int b = 0; b < inst.num_blocks(); ++b)
        if (inst.block_flags()[b] == 1 && !touched[b]) ++v;
    return v;
}

bool scp_selection_valid(const ScpInstance& inst, const std::vector<int>& chosen) {
    uint32_t cov = 0;
    std::vector<char> touched(inst.num_blocks(), 0);
    for (int j : chosen) {
        if (j < 0 || j >= inst.num_sets()) return false;
        cov |= inst.family()[j];
        touched[inst.block_of(j)] = 1;
    }
    if ((inst.universe_mask() & ~cov) != 0) return false;
    for (int b = 0; b < inst.num_blocks(); ++b)
        if (inst.block_flags()[b] == 2 && !touched[b]) return false;
    return true;
}

bool iscp_selection_valid(const ScpInstance& inst, const std::vector<int>& chosen) {
    if (!scp_selection_valid(inst, chosen)) return false;
    std::vector<int> count(inst.num_blocks(), 0);
    for (int j : chosen)
        if (++count[inst.block_of(j)] > 1) return false;
    return true;
}

std::string serialize_scp(const ScpInstance& inst) {
    std::ostringstream out;
    out << "u " << inst.universe_size() << "\n";
    if (inst.budget()) out << "budget " << *inst.budget() << "\n";
    int at = 0;
    for (int b = 0; b < inst.num_blocks(); ++b) {
        out << "block " << inst.block_flags()[b] << "\n";
        for (int i = 0; i < inst.block_sizes()[b]; ++i, ++at) {
            out << "set";
            uint32_t s = inst.family()[at];
            for (int e = 0; e < inst.universe_size(); ++e)
                if (s & (1u << e)) out << " " << e;
            out << "\n";
        }
    }
    return out.str();
}

ScpInstance parse_scp(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    bool have_u = false;
    int usize = 0;
    std::optional<int32_t> budget;
    std::vector<uint32_t> family;
    std::vector<int> block_sizes, block_flags;

    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "u") {
            if (have_u) throw parse_error("duplicate universe line", lineno);
            if (!block_sizes.empty()) throw parse_error("universe line must come first", lineno);
            if (!(ls >> usize)) throw parse_error("universe line needs a size", lineno);
            have_u = true;
        } else if (tok == "budget") {
            int32_t l;
            if (!(ls >> l)) throw parse_error("budget line needs an integer", lineno);
            budget = l;
        } else if (tok == "block") {
            if (!have_u) throw parse_error("universe line must precede blocks", lineno);
            int f;
            if (!(ls >> f)) throw parse_error("block line needs a flag", lineno);
            block_sizes.push_back(0);
            block_flags.push_back(f);
        } else if (tok == "set") {
            if (block_sizes.empty()) throw parse_error("set line outside any block", lineno);
            uint32_t mask = 0;
            int e;
            while (ls >> e) {
                if (e < 0 || e >= usize)
                    throw parse_error("element " + std::to_string(e) + " outside universe of size " +
                                          std::to_string(usize),
                                      lineno);
                mask |= 1u << e;
            }
            if (!ls.eof()) throw parse_error("non-integer element in set line", lineno);
            family.push_back(mask);
            ++block_sizes.back();
        } else {
            throw parse_error("unknown directive '" + tok + "'", lineno);
        }
    }
    if (!have_u) throw parse_error("missing universe line", lineno);
    try {
        return ScpInstance(usize, std::move(family), std::move(block_sizes),
                           std::move(block_flags), budget);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), lineno);
    }
}

}  // namespace romancvd
