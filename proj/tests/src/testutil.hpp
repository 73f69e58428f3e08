// Shared helpers for the unit and acceptance suites. The brute-force routines
// here are written straight from the problem definitions on purpose, so they
// stay independent of the library's own dynamic programming and validators.
#pragma once

#include <atomic>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "romancvd/graph.hpp"
#include "romancvd/scp.hpp"

namespace testutil {

inline romancvd::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return romancvd::Graph(n, edges);
}

inline romancvd::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n > 2) edges.emplace_back(0, n - 1);
    return romancvd::Graph(n, edges);
}

inline romancvd::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return romancvd::Graph(n, edges);
}

// Exhaustive minimum over all selections, checked directly against the cover,
// flag and (optionally) one-pick-per-block rules.
inline int32_t brute_partitioned_cover(const romancvd::ScpInstance& inst, bool independent) {
    const int m = inst.num_sets();
    const int q = inst.num_blocks();
    int32_t best = romancvd::kInfiniteValue;
    for (uint32_t sel = 0; sel < (1u << m); ++sel) {
        uint32_t covered = 0;
        std::vector<int> picks(q, 0);
        for (int j = 0; j < m; ++j) {
            if (sel >> j & 1) {
                covered |= inst.family()[j];
                ++picks[inst.block_of(j)];
            }
        }
        if ((covered & inst.universe_mask()) != inst.universe_mask()) continue;
        bool ok = true;
        int32_t cost = 0;
        for (int b = 0; b < q && ok; ++b) {
            const int flag = inst.block_flags()[b];
            const int c = picks[b];
            cost += 2 * c;
            if (independent && c > 1) ok = false;
            if (flag == 2 && (independent ? c != 1 : c == 0)) ok = false;
            if (flag == 1 && c == 0) cost += 1;
        }
        if (ok && cost < best) best = cost;
    }
    return best;
}

// Minimum number of vertices whose removal makes every component a clique.
// Subset sweep in popcount order; first hit wins.
inline int brute_min_cvd_size(const romancvd::Graph& g) {
    const int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_min_cvd_size: graph too large");
    auto leaves_cluster = [&](uint32_t removed) {
        std::vector<int> comp(n, -1);
        for (int s = 0; s < n; ++s) {
            if ((removed >> s & 1) || comp[s] >= 0) continue;
            std::vector<int> members;
            std::queue<int> bfs;
            bfs.push(s);
            comp[s] = s;
            while (!bfs.empty()) {
                int v = bfs.front();
                bfs.pop();
                members.push_back(v);
                for (int w : g.neighbors(v)) {
                    if ((removed >> w & 1) || comp[w] >= 0) continue;
                    comp[w] = s;
                    bfs.push(w);
                }
            }
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    if (!g.has_edge(members[i], members[j])) return false;
        }
        return true;
    };
    for (int size = 0; size <= n; ++size)
        for (uint32_t mask = 0; mask < (1u << n); ++mask)
            if (std::popcount(mask) == size && leaves_cluster(mask)) return size;
    return n;
}

// Minimum dominating set size by subset sweep.
inline int brute_min_dominating_size(const romancvd::Graph& g) {
    const int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_min_dominating_size: graph too large");
    std::vector<uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int w : g.neighbors(v)) closed[v] |= 1u << w;
    }
    const uint32_t full = n == 0 ? 0u : (~0u >> (32 - n));
    int best = n;
    for (uint32_t mask = 0; mask <= full && full; ++mask) {
        if (std::popcount(mask) >= best) continue;
        uint32_t dom = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) dom |= closed[v];
        if (dom == full) best = std::popcount(mask);
    }
    return best;
}

class TempFile {
  public:
    explicit TempFile(const std::string& content, const std::string& suffix = ".txt") {
        static std::atomic<int> counter{0};
        path_ = (std::filesystem::temp_directory_path() /
                 ("romancvd_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter.fetch_add(1)) + suffix))
                    .string();
        FILE* f = std::fopen(path_.c_str(), "w");
        if (!f) throw std::runtime_error("cannot create temp file " + path_);
        std::fwrite(content.data(), 1, content.size(), f);
        std::fclose(f);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

struct CliResult {
    int exit_code = -1;
    std::string out;
};

#ifdef ROMANCVD_CLI_PATH
inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ROMANCVD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = ::pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}
#endif

}  // namespace testutil
