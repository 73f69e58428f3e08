#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "romancvd/cluster.hpp"
#include "romancvd/graph.hpp"

namespace romancvd::detail {

// Bitmask view of the modulator: every vertex gets the mask of its
// S-neighbors over sorted modulator positions, modulator vertices
// additionally their closed neighborhood within S.
struct ModulatorIndex {
    std::vector<int> s;            // sorted
    std::vector<int> pos;          // vertex -> position in s, or -1
    std::vector<uint32_t> vmask;   // per vertex: neighbors within S
    std::vector<uint32_t> closed;  // per position: own bit | vmask of s[i]
    uint32_t full = 0;

    static ModulatorIndex build(const Graph& g, const std::vector<int>& sorted_s) {
        ModulatorIndex mi;
        mi.s = sorted_s;
        int k = static_cast<int>(sorted_s.size());
        mi.pos.assign(g.num_vertices(), -1);
        for (int i = 0; i < k; ++i) mi.pos[sorted_s[i]] = i;
        mi.vmask.assign(g.num_vertices(), 0);
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int u : g.neighbors(v))
                if (mi.pos[u] >= 0) mi.vmask[v] |= 1u << mi.pos[u];
        mi.closed.resize(k);
        for (int i = 0; i < k; ++i) mi.closed[i] = (1u << i) | mi.vmask[sorted_s[i]];
        mi.full = k == 0 ? 0u : (~0u >> (32 - k));
        return mi;
    }

    uint32_t closed_of(uint32_t subset) const {
        uint32_t out = subset;
        uint32_t rest = subset;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            out |= closed[i];
        }
        return out;
    }

    std::vector<int> to_vertices(uint32_t subset) const {
        std::vector<int> out;
        while (subset) {
            int i = std::countr_zero(subset);
            subset &= subset - 1;
            out.push_back(s[i]);
        }
        return out;
    }
};

// Cliques flattened for tight scanning.
struct CliqueIndex {
    std::vector<int> start;  // q+1 offsets into verts
    std::vector<int> verts;
    int q = 0;

    static CliqueIndex build(const ClusterDecomposition& d) {
        CliqueIndex ci;
        ci.q = static_cast<int>(d.cliques.size());
        ci.start.reserve(ci.q + 1);
        ci.start.push_back(0);
        for (const auto& c : d.cliques) {
            ci.verts.insert(ci.verts.end(), c.begin(), c.end());
            ci.start.push_back(static_cast<int>(ci.verts.size()));
        }
        return ci;
    }
};

// Contiguous [lo, hi) chunks of the 2^k subset range for nthreads workers.
inline std::vector<std::pair<uint64_t, uint64_t>> subset_chunks(int k, int nthreads) {
    uint64_t total = uint64_t(1) << k;
    uint64_t nt = std::min<uint64_t>(std::max(nthreads, 1), total);
    std::vector<std::pair<uint64_t, uint64_t>> chunks;
    uint64_t base = total / nt, rem = total % nt, lo = 0;
    for (uint64_t t = 0; t < nt; ++t) {
        uint64_t hi = lo + base + (t < rem ? 1 : 0);
        chunks.emplace_back(lo, hi);
        lo = hi;
    }
    return chunks;
}

}  // namespace romancvd::detail
