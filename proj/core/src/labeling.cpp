#include "romancvd/labeling.hpp"

#include <sstream>

namespace romancvd {

RomanLabeling make_labeling(std::vector<uint8_t> labels) {
    RomanLabeling f;
    f.weight = 0;
    for (uint8_t x : labels) {
        if (x > 2) throw std::invalid_argument("label out of range {0,1,2}: " + std::to_string(int(x)));
        f.weight += x;
    }
    f.labels = std::move(labels);
    return f;
}

namespace {

void check_domain(const Graph& g, const RomanLabeling& f) {
    if (static_cast<int>(f.labels.size()) != g.num_vertices())
        throw std::invalid_argument("labeling defined on " + std::to_string(f.labels.size()) +
                                    " vertices, graph has " + std::to_string(g.num_vertices()));
}

}  // namespace

bool validate_rdf(const Graph& g, const RomanLabeling& f) {
    check_domain(g, f);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (f.labels[v] != 0) continue;
        bool defended = false;
        for (int u : g.neighbors(v)) {
            if (f.labels[u] == 2) {
                defended = true;
                break;
            }
        }
        if (!defended) return false;
    }
    return true;
}

bool validate_irdf(const Graph& g, const RomanLabeling& f) {
    if (!validate_rdf(g, f)) return false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (f.labels[v] == 0) continue;
        for (int u : g.neighbors(v))
            if (u > v && f.labels[u] != 0) return false;
    }
    return true;
}

std::string format_labeling_csv(const RomanLabeling& f) {
    std::string out;
    out.reserve(f.labels.size() * 2);
    for (size_t i = 0; i < f.labels.size(); ++i) {
        if (i) out += ',';
        out += static_cast<char>('0' + f.labels[i]);
    }
    return out;
}

RomanLabeling parse_labeling_csv(const std::string& text) {
    std::vector<uint8_t> labels;
    std::string tok;
    std::istringstream in(text);
    bool any_token = false;
    while (std::getline(in, tok, ',')) {
        any_token = true;
        size_t begin = tok.find_first_not_of(" \t\r\n");
        size_t end = tok.find_last_not_of(" \t\r\n");
        if (begin == std::string::npos) throw parse_error("empty labeling entry", 1);
        std::string body = tok.substr(begin, end - begin + 1);
        if (body.size() != 1 || body[0] < '0' || body[0] > '2')
            throw parse_error("labeling entry must be one of 0,1,2: '" + body + "'", 1);
        labels.push_back(static_cast<uint8_t>(body[0] - '0'));
    }
    if (!any_token && !text.empty()) throw parse_error("malformed labeling text", 1);
    return make_labeling(std::move(labels));
}

}  // namespace romancvd
