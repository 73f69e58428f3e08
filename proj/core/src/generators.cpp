#include "romancvd/generators.hpp"

#include <algorithm>
#include <sstream>

#include "romancvd/rng.hpp"

namespace romancvd {

GeneratedInstance gen_cluster_plus_k(int num_cliques, std::pair<int, int> clique_size_range,
                                     int k, double edge_prob, uint64_t seed) {
    auto [size_min, size_max] = clique_size_range;
    if (num_cliques < 0 || k < 0) throw std::invalid_argument("counts must be nonnegative");
    if (size_min < 1 || size_min > size_max)
        throw std::invalid_argument("clique size range must satisfy 1 <= min <= max");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");

    SplitMix64 rng(seed);
    std::vector<int> sizes(num_cliques);
    for (int i = 0; i < num_cliques; ++i)
        sizes[i] = size_min + static_cast<int>(rng.next_below(
                                  static_cast<uint64_t>(size_max - size_min) + 1));

    int clique_vertices = 0;
    for (int s : sizes) clique_vertices += s;
    const int n = clique_vertices + k;

    std::vector<std::pair<int, int>> edges;
    int at = 0;
    for (int s : sizes) {
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) edges.emplace_back(at + a, at + b);
        at += s;
    }
    for (int a = clique_vertices; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.next_bernoulli(edge_prob)) edges.emplace_back(a, b);
    for (int a = clique_vertices; a < n; ++a)
        for (int b = 0; b < clique_vertices; ++b)
            if (rng.next_bernoulli(edge_prob)) edges.emplace_back(a, b);

    GeneratedInstance out;
    out.graph = Graph(n, edges);
    out.cvd_set.resize(k);
    for (int i = 0; i < k; ++i) out.cvd_set[i] = clique_vertices + i;
    return out;
}

ReductionResult hitting_set_to_rd_instance(int universe_size,
                                           const std::vector<std::vector<int>>& sets) {
    if (universe_size < 0) throw std::invalid_argument("universe size must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < universe_size; ++a)
        for (int b = a + 1; b < universe_size; ++b) edges.emplace_back(a, b);
    const int m = static_cast<int>(sets.size());
    for (int j = 0; j < m; ++j) {
        if (sets[j].empty())
            throw std::invalid_argument("set " + std::to_string(j) +
                                        " is empty; its vertices would be undominatable");
        const int copy1 = universe_size + 2 * j;
        const int copy2 = copy1 + 1;
        for (int e : sets[j]) {
            if (e < 0 || e >= universe_size)
                throw std::invalid_argument("set element " + std::to_string(e) +
                                            " outside universe of size " +
                                            std::to_string(universe_size));
            edges.emplace_back(copy1, e);
            edges.emplace_back(copy2, e);
        }
    }
    ReductionResult out;
    out.graph = Graph(universe_size + 2 * m, edges);
    out.universe_vertices.resize(universe_size);
    for (int i = 0; i < universe_size; ++i) out.universe_vertices[i] = i;
    return out;
}

std::vector<std::vector<int>> parse_hitting_set_spec(const std::string& text) {
    std::vector<std::vector<int>> sets;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        ls.clear();
        ls.seekg(0);
        std::vector<int> set;
        int e;
        while (ls >> e) set.push_back(e);
        if (!ls.eof()) throw parse_error("non-integer set element", lineno);
        sets.push_back(std::move(set));
    }
    return sets;
}

}  // namespace romancvd
