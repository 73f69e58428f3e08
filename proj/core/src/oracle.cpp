#include "romancvd/oracle.hpp"

#include <algorithm>
#include <bit>

namespace romancvd {

namespace {

OracleResult brute_force(const Graph& g, int cap, bool independent) {
    const int n = g.num_vertices();
    if (n > cap)
        throw std::invalid_argument("brute force refused: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap) +
                                    " (raise the cap knowingly if intended)");

    std::vector<uint8_t> cur(n, 0);
    int32_t weight = 0;
    int32_t best = -1;
    std::vector<uint8_t> best_labels;
    while (true) {
        if (best < 0 || weight < best) {
            RomanLabeling f{cur, weight};
            if (independent ? validate_irdf(g, f) : validate_rdf(g, f)) {
                best = weight;
                best_labels = cur;
            }
        }
        int at = n - 1;
        while (at >= 0 && cur[at] == 2) {
            cur[at--] = 0;
            weight -= 2;
        }
        if (at < 0) break;
        ++cur[at];
        ++weight;
    }
    OracleResult res;
    res.value = best;
    res.labeling = make_labeling(std::move(best_labels));
    return res;
}

}  // namespace

OracleResult brute_force_rd(const Graph& g, int cap) { return brute_force(g, cap, false); }

OracleResult brute_force_ird(const Graph& g, int cap) { return brute_force(g, cap, true); }

int brute_force_hitting_set(int universe_size, const std::vector<std::vector<int>>& sets,
                            int cap) {
    if (universe_size < 0 || universe_size > cap || universe_size > 30)
        throw std::invalid_argument("hitting set brute force refused: universe size " +
                                    std::to_string(universe_size) + " outside [0, " +
                                    std::to_string(std::min(cap, 30)) + "]");
    std::vector<uint32_t> masks;
    masks.reserve(sets.size());
    for (const auto& set : sets) {
        uint32_t m = 0;
        for (int e : set) {
            if (e < 0 || e >= universe_size)
                throw std::invalid_argument("set element " + std::to_string(e) +
                                            " outside universe");
            m |= 1u << e;
        }
        if (m == 0) throw std::invalid_argument("empty set cannot be hit");
        masks.push_back(m);
    }
    int best = universe_size;
    const uint32_t limit = universe_size == 0 ? 1u : (1u << universe_size);
    for (uint32_t sub = 0; sub < limit; ++sub) {
        if (std::popcount(sub) >= best && sub != 0) continue;
        bool hits = true;
        for (uint32_t m : masks) {
            if ((m & sub) == 0) {
                hits = false;
                break;
            }
        }
        if (hits) best = std::popcount(sub);
    }
    return best;
}

}  // namespace romancvd
