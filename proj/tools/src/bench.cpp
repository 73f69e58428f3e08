#include "bench.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "romancvd/generators.hpp"
#include "romancvd/ird_pipeline.hpp"
#include "romancvd/rd_pipeline.hpp"

namespace {

struct BenchRun {
    std::string variant = "rd";
    int cliques = 1;
    int size_min = 1, size_max = 3;
    int k = 0;
    double edge_prob = 0.5;
    std::vector<uint64_t> seeds;
    int reps = 1;
};

std::vector<BenchRun> parse_config(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<BenchRun> runs;
    if (!j.contains("runs")) return runs;
    for (const auto& r : j.at("runs")) {
        BenchRun b;
        b.variant = r.value("variant", "rd");
        if (b.variant != "rd" && b.variant != "ird")
            throw std::invalid_argument("variant must be rd or ird, got '" + b.variant + "'");
        b.cliques = r.value("cliques", 1);
        b.size_min = r.value("size_min", 1);
        b.size_max = r.value("size_max", 3);
        b.k = r.value("k", 0);
        b.edge_prob = r.value("edge_prob", 0.5);
        b.reps = r.value("reps", 1);
        if (r.contains("seeds"))
            for (const auto& s : r.at("seeds")) b.seeds.push_back(s.get<uint64_t>());
        if (b.seeds.empty()) b.seeds.push_back(1);
        runs.push_back(std::move(b));
    }
    return runs;
}

}  // namespace

int run_bench(const std::string& config_path, const std::string& out_path) {
    std::ifstream cfg(config_path);
    if (!cfg) {
        std::cerr << "bench: cannot open config: " << config_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << cfg.rdbuf();

    std::vector<BenchRun> runs;
    try {
        runs = parse_config(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "bench: config parse failure: " << e.what() << "\n";
        return 2;
    }

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "bench: cannot open output: " << out_path << "\n";
            return 2;
        }
        out = &out_file;
    }

    // value, guesses_enumerated and scp_cells are deterministic per
    // (variant, params, seed); wall_ms is not.
    *out << "variant,n,k,seed,value,wall_ms,guesses_enumerated,scp_cells\n";
    uint64_t rows = 0;
    double total_ms = 0.0;
    for (const auto& run : runs) {
        for (uint64_t seed : run.seeds) {
            romancvd::GeneratedInstance inst = romancvd::gen_cluster_plus_k(
                run.cliques, {run.size_min, run.size_max}, run.k, run.edge_prob, seed);
            for (int rep = 0; rep < run.reps; ++rep) {
                auto t0 = std::chrono::steady_clock::now();
                romancvd::SolveResult res =
                    run.variant == "rd" ? romancvd::solve_rd(inst.graph, inst.cvd_set)
                                        : romancvd::solve_ird(inst.graph, inst.cvd_set);
                auto t1 = std::chrono::steady_clock::now();
                double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                total_ms += ms;
                ++rows;
                char msbuf[32];
                std::snprintf(msbuf, sizeof msbuf, "%.3f", ms);
                *out << run.variant << "," << inst.graph.num_vertices() << "," << run.k << ","
                     << seed << "," << res.value << "," << msbuf << ","
                     << res.stats.guesses_enumerated << "," << res.stats.scp_cells << "\n";
            }
        }
    }
    std::cerr << "bench: " << rows << " rows, " << runs.size() << " runs, total solve time "
              << total_ms << " ms\n";
    return 0;
}
