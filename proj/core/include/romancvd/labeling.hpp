#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "romancvd/graph.hpp"

namespace romancvd {

// Total function V -> {0,1,2}; the solution object for both problem variants.
struct RomanLabeling {
    std::vector<uint8_t> labels;
    int weight = 0;
};

// Builds a labeling from raw labels, computing the weight. Rejects values
// outside {0,1,2}.
RomanLabeling make_labeling(std::vector<uint8_t> labels);

// True iff every 0-labeled vertex has a neighbor labeled 2.
// Throws std::invalid_argument when f is not defined on all of g.
bool validate_rdf(const Graph& g, const RomanLabeling& f);

// validate_rdf plus: no edge joins two nonzero-labeled vertices.
bool validate_irdf(const Graph& g, const RomanLabeling& f);

// Comma-separated digits in vertex-index order, e.g. "0,2,0".
std::string format_labeling_csv(const RomanLabeling& f);
RomanLabeling parse_labeling_csv(const std::string& text);

}  // namespace romancvd
