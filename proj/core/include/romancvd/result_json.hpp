#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romancvd/rd_pipeline.hpp"

namespace romancvd {

// Value-level view of a serialized result, used for round-trip checks.
struct ParsedResult {
    std::string schema;
    std::string variant;
    std::optional<int32_t> value;  // absent when the solve found nothing (JSON null)
    std::vector<int> labeling;
    std::vector<int> s1, s2;
    std::optional<bool> feasible;

    bool operator==(const ParsedResult&) const = default;
};

ParsedResult to_parsed(const SolveResult& r, const std::string& variant);

// Single line, fixed key order: schema, variant, value, labeling,
// guess{s1,s2}, then feasible when present. Stable across runs and thread
// counts because SolveResult itself is.
std::string solve_result_to_json(const SolveResult& r, const std::string& variant);

ParsedResult parse_result_json(const std::string& text);

}  // namespace romancvd
