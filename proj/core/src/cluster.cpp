#include "romancvd/cluster.hpp"

#include <algorithm>

namespace romancvd {

namespace {

// Components of the subgraph induced by alive vertices, discovered in
// ascending order of their minimum vertex, members sorted ascending.
std::vector<std::vector<int>> alive_components(const Graph& g, const std::vector<char>& alive) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || seen[v]) continue;
        std::vector<int> comp;
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
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int alive_degree(const Graph& g, int v, const std::vector<char>& alive) {
    int d = 0;
    for (int u : g.neighbors(v))
        if (alive[u]) ++d;
    return d;
}

bool component_is_clique(const Graph& g, const std::vector<int>& comp,
                         const std::vector<char>& alive) {
    int want = static_cast<int>(comp.size()) - 1;
    for (int v : comp)
        if (alive_degree(g, v, alive) != want) return false;
    return true;
}

// First induced P3 within comp by ascending sorted triple (a, b, c); comp is
// known not to be a clique, so one exists.
InducedP3 witness_in_component(const Graph& g, const std::vector<int>& comp) {
    for (size_t i = 0; i < comp.size(); ++i) {
        for (size_t j = i + 1; j < comp.size(); ++j) {
            for (size_t k = j + 1; k < comp.size(); ++k) {
                int a = comp[i], b = comp[j], c = comp[k];
                bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), bc = g.has_edge(b, c);
                if (ab + ac + bc != 2) continue;
                // endpoints ascending, middle vertex second
                if (!ab) return {a, c, b};
                if (!ac) return {a, b, c};
                return {b, a, c};
            }
        }
    }
    throw std::logic_error("witness_in_component: component was a clique");
}

}  // namespace

bool is_cluster(const Graph& g) {
    std::vector<char> alive(g.num_vertices(), 1);
    for (const auto& comp : alive_components(g, alive))
        if (!component_is_clique(g, comp, alive)) return false;
    return true;
}

ClusterDecomposition clique_components(const Graph& g, const std::vector<int>& s) {
    int n = g.num_vertices();
    std::vector<char> alive(n, 1);
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("modulator vertex out of range: " + std::to_string(v));
        alive[v] = 0;
    }

    ClusterDecomposition d;
    d.cvd_set.assign(s.begin(), s.end());
    std::sort(d.cvd_set.begin(), d.cvd_set.end());
    d.cvd_set.erase(std::unique(d.cvd_set.begin(), d.cvd_set.end()), d.cvd_set.end());
    d.vertex_to_clique.assign(n, -1);

    for (auto& comp : alive_components(g, alive)) {
        if (!component_is_clique(g, comp, alive)) throw not_cluster_error(witness_in_component(g, comp));
        int idx = static_cast<int>(d.cliques.size());
        for (int v : comp) d.vertex_to_clique[v] = idx;
        d.cliques.push_back(std::move(comp));
    }
    return d;
}

}  // namespace romancvd
