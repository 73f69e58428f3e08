#include "romancvd/cvd.hpp"

#include <algorithm>
#include <array>

namespace romancvd {

namespace {

bool alive_subgraph_is_cluster(const Graph& g, const std::vector<char>& alive) {
    int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<int> stack, comp;
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || seen[v]) continue;
        comp.clear();
        stack.push_back(v);
        seen[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y : g.neighbors(x)) {
                if (alive[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        int want = static_cast<int>(comp.size()) - 1;
        for (int x : comp) {
            int d = 0;
            for (int y : g.neighbors(x))
                if (alive[y]) ++d;
            if (d != want) return false;
        }
    }
    return true;
}

// Lexicographically smallest sorted triple x < y < z spanning an induced P3
// in the alive subgraph, or nullopt when that subgraph is a cluster graph.
std::optional<std::array<int, 3>> find_branch_triple(const Graph& g,
                                                     const std::vector<char>& alive) {
    if (alive_subgraph_is_cluster(g, alive)) return std::nullopt;
    int n = g.num_vertices();
    for (int x = 0; x < n; ++x) {
        if (!alive[x]) continue;
        for (int y = x + 1; y < n; ++y) {
            if (!alive[y]) continue;
            for (int z = y + 1; z < n; ++z) {
                if (!alive[z]) continue;
                int edges = g.has_edge(x, y) + g.has_edge(x, z) + g.has_edge(y, z);
                if (edges == 2) return std::array<int, 3>{x, y, z};
            }
        }
    }
    throw std::logic_error("find_branch_triple: non-cluster subgraph without a P3");
}

struct CvdSearch {
    const Graph& g;
    std::vector<char> alive;
    std::vector<int> current;
    std::optional<std::vector<int>> best;

    void run(int budget) {
        if (best && current.size() + 1 > best->size()) return;  // cannot improve
        auto triple = find_branch_triple(g, alive);
        if (!triple) {
            if (!best || current.size() < best->size()) {
                best = current;
                std::sort(best->begin(), best->end());
            }
            return;
        }
        if (budget == 0) return;
        for (int v : *triple) {
            alive[v] = 0;
            current.push_back(v);
            run(budget - 1);
            current.pop_back();
            alive[v] = 1;
        }
    }
};

}  // namespace

std::optional<std::vector<int>> find_cvd(const Graph& g, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    CvdSearch search{g, std::vector<char>(g.num_vertices(), 1), {}, std::nullopt};
    search.run(k_max);
    return search.best;
}

bool verify_cvd(const Graph& g, const std::vector<int>& s) {
    std::vector<char> alive(g.num_vertices(), 1);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices()) return false;
        alive[v] = 0;
    }
    return alive_subgraph_is_cluster(g, alive);
}

}  // namespace romancvd
