#include "romancvd/result_json.hpp"

#include "json.hpp"

namespace romancvd {

ParsedResult to_parsed(const SolveResult& r, const std::string& variant) {
    ParsedResult p;
    p.schema = "1";
    p.variant = variant;
    if (r.value < kInfiniteValue) p.value = r.value;
    p.labeling.assign(r.labeling.labels.begin(), r.labeling.labels.end());
    p.s1 = r.s1;
    p.s2 = r.s2;
    p.feasible = r.feasible;
    return p;
}

std::string solve_result_to_json(const SolveResult& r, const std::string& variant) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["variant"] = variant;
    if (r.value < kInfiniteValue)
        j["value"] = r.value;
    else
        j["value"] = nullptr;
    j["labeling"] = std::vector<int>(r.labeling.labels.begin(), r.labeling.labels.end());
    j["guess"]["s1"] = r.s1;
    j["guess"]["s2"] = r.s2;
    if (r.feasible) j["feasible"] = *r.feasible;
    return j.dump();
}

ParsedResult parse_result_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("bad result JSON: ") + e.what(), 1);
    }
    ParsedResult p;
    try {
        p.schema = j.at("schema").get<std::string>();
        p.variant = j.at("variant").get<std::string>();
        if (!j.at("value").is_null()) p.value = j.at("value").get<int32_t>();
        p.labeling = j.at("labeling").get<std::vector<int>>();
        if (j.contains("guess")) {
            p.s1 = j["guess"].at("s1").get<std::vector<int>>();
            p.s2 = j["guess"].at("s2").get<std::vector<int>>();
        }
        if (j.contains("feasible")) p.feasible = j["feasible"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad result JSON: ") + e.what(), 1);
    }
    return p;
}

}  // namespace romancvd
