#include "romancvd/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace romancvd {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> names)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0))), names_(std::move(names)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (!names_.empty() && static_cast<int>(names_.size()) != n)
        throw std::invalid_argument("name table size does not match vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        m_ += static_cast<int>(list.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(list.begin(), list.end(), other);
}

namespace {

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

int parse_vertex_id(const std::string& tok, int line) {
    if (!is_integer_token(tok)) throw parse_error("expected integer vertex id, got '" + tok + "'", line);
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw parse_error("vertex id out of range: '" + tok + "'", line);
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    bool have_header = false;
    int header_n = 0;
    long long header_m = 0;
    long long edges_seen = 0;
    std::vector<std::pair<int, int>> edges;

    // Named mode state; engaged lazily when a non-integer endpoint shows up.
    bool named = false;
    std::unordered_map<std::string, int> name_to_id;
    std::vector<std::string> names;
    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = name_to_id.emplace(tok, static_cast<int>(names.size()));
        if (inserted) names.push_back(tok);
        return it->second;
    };

    int max_seen = -1;

    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok == "c") continue;

        if (tok == "p") {
            if (have_header) throw parse_error("duplicate header line", lineno);
            if (!edges.empty() || named)
                throw parse_error("header must precede all edges", lineno);
            std::string ns, ms, extra;
            if (!(ls >> ns >> ms)) throw parse_error("header needs vertex and edge counts", lineno);
            if (ls >> extra) throw parse_error("trailing token '" + extra + "' on header", lineno);
            header_n = parse_vertex_id(ns, lineno);
            if (!is_integer_token(ms)) throw parse_error("expected integer edge count, got '" + ms + "'", lineno);
            header_m = std::stoll(ms);
            if (header_n < 0 || header_m < 0) throw parse_error("negative count in header", lineno);
            have_header = true;
            continue;
        }

        std::string a, b, extra;
        if (tok == "e") {
            if (!have_header) throw parse_error("edge line 'e' requires a header", lineno);
            if (!(ls >> a >> b)) throw parse_error("edge line needs two endpoints", lineno);
        } else {
            if (have_header) throw parse_error("expected 'e <u> <v>' after header, got '" + tok + "'", lineno);
            a = tok;
            if (!(ls >> b)) throw parse_error("edge line needs two endpoints", lineno);
        }
        if (ls >> extra) throw parse_error("trailing token '" + extra + "' on edge line", lineno);

        int u, v;
        if (have_header) {
            u = parse_vertex_id(a, lineno);
            v = parse_vertex_id(b, lineno);
            if (u < 0 || u >= header_n || v < 0 || v >= header_n)
                throw parse_error("endpoint out of range [0, " + std::to_string(header_n) + ")", lineno);
            ++edges_seen;
        } else if (named || !is_integer_token(a) || !is_integer_token(b)) {
            if (!named && !edges.empty())
                throw parse_error("cannot mix bare integer ids and name tokens", lineno);
            named = true;
            u = intern(a);
            v = intern(b);
        } else {
            u = parse_vertex_id(a, lineno);
            v = parse_vertex_id(b, lineno);
            if (u < 0 || v < 0) throw parse_error("negative vertex id", lineno);
        }
        if (u == v) throw parse_error("self loop at '" + a + "'", lineno);
        max_seen = std::max({max_seen, u, v});
        edges.emplace_back(u, v);
    }

    if (have_header && edges_seen != header_m)
        throw parse_error("header declares " + std::to_string(header_m) + " edges, found " +
                              std::to_string(edges_seen),
                          lineno);

    int n = have_header ? header_n : max_seen + 1;
    try {
        return Graph(n, edges, named ? std::move(names) : std::vector<std::string>{});
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), lineno);
    }
}

std::string serialize_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.num_edges()));
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace romancvd
