#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "json.hpp"
#include "romancvd/cvd.hpp"
#include "romancvd/generators.hpp"
#include "romancvd/ird_pipeline.hpp"
#include "romancvd/oracle.hpp"
#include "romancvd/rd_pipeline.hpp"
#include "romancvd/result_json.hpp"

namespace {

using namespace romancvd;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// Modulator file: whitespace-separated vertex ids, "c" comment lines allowed.
std::vector<int> read_vertex_set(const std::string& path) {
    std::istringstream in(slurp(path));
    std::vector<int> verts;
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
        int v;
        while (ls >> v) verts.push_back(v);
        if (!ls.eof()) throw parse_error("non-integer vertex id in set file", lineno);
    }
    return verts;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

struct SolveArgs {
    std::string graph_path, cvd_path;
    int kmax = -1;
    std::optional<int32_t> budget;
    int threads = 1;
    bool json = false;
};

int cmd_solve(const SolveArgs& a, bool independent) {
    Graph g = parse_graph(slurp(a.graph_path));
    std::vector<int> s;
    if (!a.cvd_path.empty()) {
        s = read_vertex_set(a.cvd_path);
    } else {
        int kmax = a.kmax >= 0 ? a.kmax : g.num_vertices();
        auto found = find_cvd(g, kmax);
        if (!found) {
            std::cerr << "no cluster vertex deletion set within kmax = " << kmax << "\n";
            return 2;
        }
        s = *found;
    }
    SolveOptions opts;
    opts.budget = a.budget;
    opts.threads = a.threads;
    SolveResult res = independent ? solve_ird(g, s, opts) : solve_rd(g, s, opts);

    const std::string variant = independent ? "ird" : "rd";
    if (a.json) {
        std::cout << solve_result_to_json(res, variant) << "\n";
    } else if (res.value >= kInfiniteValue) {
        std::cout << "INFEASIBLE\n";
    } else {
        std::cout << "value " << res.value << "\n";
        std::cout << "labeling " << format_labeling_csv(res.labeling) << "\n";
        std::cout << "s1 " << join_ints(res.s1) << "\n";
        std::cout << "s2 " << join_ints(res.s2) << "\n";
        if (res.feasible) std::cout << (*res.feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
    }
    return res.feasible && !*res.feasible ? 1 : 0;
}

int cmd_cvd(const std::string& graph_path, int kmax) {
    Graph g = parse_graph(slurp(graph_path));
    auto found = find_cvd(g, kmax);
    if (!found) {
        std::cout << "NONE\n";
        return 1;
    }
    std::cout << join_ints(*found) << "\n";
    return 0;
}

int cmd_oracle(const std::string& graph_path, int cap, bool json, bool independent) {
    Graph g = parse_graph(slurp(graph_path));
    OracleResult res = independent ? brute_force_ird(g, cap) : brute_force_rd(g, cap);
    if (json) {
        nlohmann::ordered_json j;
        j["schema"] = "1";
        j["variant"] = independent ? "ird" : "rd";
        j["value"] = res.value;
        j["labeling"] =
            std::vector<int>(res.labeling.labels.begin(), res.labeling.labels.end());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "value " << res.value << "\n";
        std::cout << "labeling " << format_labeling_csv(res.labeling) << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& labeling_csv,
                 const std::string& variant) {
    Graph g = parse_graph(slurp(graph_path));
    RomanLabeling f = parse_labeling_csv(labeling_csv);
    bool ok = variant == "ird" ? validate_irdf(g, f) : validate_rdf(g, f);
    std::cout << (ok ? "VALID" : "INVALID") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Roman domination solvers on graphs close to cluster graphs"};
    app.require_subcommand(1);

    // solve {rd|ird}
    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Solve a domination variant exactly");
    solve->require_subcommand(1);
    auto add_solve_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", sa.graph_path, "edge list file")->required();
        sub->add_option("--cvd", sa.cvd_path,
                        "file with a cluster vertex deletion set (computed when absent)");
        sub->add_option("--kmax", sa.kmax, "search bound when computing the deletion set");
        sub->add_option("--budget", sa.budget, "decide weight <= budget instead of optimizing");
        sub->add_option("--threads", sa.threads, "worker threads over the guess space")
            ->default_val(1);
        sub->add_flag("--json", sa.json, "machine-readable output");
    };
    auto* solve_rd_cmd = solve->add_subcommand("rd", "Roman domination number");
    auto* solve_ird_cmd = solve->add_subcommand("ird", "independent Roman domination number");
    add_solve_opts(solve_rd_cmd);
    add_solve_opts(solve_ird_cmd);

    // cvd
    std::string cvd_graph;
    int cvd_kmax = 0;
    auto* cvd = app.add_subcommand("cvd", "Find a cluster vertex deletion set");
    cvd->add_option("--graph", cvd_graph, "edge list file")->required();
    cvd->add_option("--kmax", cvd_kmax, "maximum set size")->required();

    // oracle {rd|ird}
    std::string oracle_graph;
    int oracle_cap = 14;
    bool oracle_json = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference solver");
    oracle->require_subcommand(1);
    auto add_oracle_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", oracle_graph, "edge list file")->required();
        sub->add_option("--cap", oracle_cap, "largest n the 3^n sweep will accept")
            ->default_val(14);
        sub->add_flag("--json", oracle_json, "machine-readable output");
    };
    auto* oracle_rd_cmd = oracle->add_subcommand("rd", "Roman domination number");
    auto* oracle_ird_cmd = oracle->add_subcommand("ird", "independent Roman domination number");
    add_oracle_opts(oracle_rd_cmd);
    add_oracle_opts(oracle_ird_cmd);

    // gen {cluster|hitting-set-reduction}
    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    int gc_cliques = 1, gc_size_min = 1, gc_size_max = 3, gc_k = 0;
    double gc_prob = 0.5;
    uint64_t gc_seed = 1;
    std::string gc_out, gc_cvd_out;
    auto* gen_cluster = gen->add_subcommand("cluster", "Disjoint cliques plus a modulator");
    gen_cluster->add_option("--cliques", gc_cliques, "number of cliques")->required();
    gen_cluster->add_option("--size-min", gc_size_min, "smallest clique size")->default_val(1);
    gen_cluster->add_option("--size-max", gc_size_max, "largest clique size")->default_val(3);
    gen_cluster->add_option("--k", gc_k, "modulator size")->required();
    gen_cluster->add_option("--edge-prob", gc_prob, "modulator edge probability")
        ->default_val(0.5);
    gen_cluster->add_option("--seed", gc_seed, "PRNG seed")->default_val(1);
    gen_cluster->add_option("--out", gc_out, "write edge list here instead of stdout");
    gen_cluster->add_option("--cvd-out", gc_cvd_out, "write the planted modulator here");

    int gh_universe = 0;
    std::string gh_sets, gh_out;
    auto* gen_hs = gen->add_subcommand("hitting-set-reduction",
                                       "Split graph whose optimum weight is twice the "
                                       "minimum hitting set size");
    gen_hs->add_option("--universe", gh_universe, "universe size")->required();
    gen_hs->add_option("--sets", gh_sets, "spec file: one set per line, space-separated indices")
        ->required();
    gen_hs->add_option("--out", gh_out, "write edge list here instead of stdout");

    // validate
    std::string val_graph, val_labeling, val_variant;
    auto* validate = app.add_subcommand("validate", "Check a labeling against a graph");
    validate->add_option("--graph", val_graph, "edge list file")->required();
    validate->add_option("--labeling", val_labeling, "comma-separated labels, e.g. 0,2,0")
        ->required();
    validate->add_option("--variant", val_variant, "rd or ird")
        ->required()
        ->check(CLI::IsMember({"rd", "ird"}));

    // bench
    std::string bench_config, bench_out;
    auto* bench = app.add_subcommand("bench", "Run the benchmark harness");
    bench->add_option("--config", bench_config, "JSON config file")->required();
    bench->add_option("--out", bench_out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_rd_cmd->parsed()) return cmd_solve(sa, false);
        if (solve_ird_cmd->parsed()) return cmd_solve(sa, true);
        if (cvd->parsed()) return cmd_cvd(cvd_graph, cvd_kmax);
        if (oracle_rd_cmd->parsed()) return cmd_oracle(oracle_graph, oracle_cap, oracle_json, false);
        if (oracle_ird_cmd->parsed()) return cmd_oracle(oracle_graph, oracle_cap, oracle_json, true);
        if (gen_cluster->parsed()) {
            GeneratedInstance inst = gen_cluster_plus_k(
                gc_cliques, {gc_size_min, gc_size_max}, gc_k, gc_prob, gc_seed);
            write_out(gc_out, serialize_graph(inst.graph));
            if (!gc_cvd_out.empty()) write_out(gc_cvd_out, join_ints(inst.cvd_set) + "\n");
            return 0;
        }
        if (gen_hs->parsed()) {
            ReductionResult red =
                hitting_set_to_rd_instance(gh_universe, parse_hitting_set_spec(slurp(gh_sets)));
            std::string text = "c cvd " + join_ints(red.universe_vertices) + "\n";
            write_out(gh_out, text + serialize_graph(red.graph));
            return 0;
        }
        if (validate->parsed()) return cmd_validate(val_graph, val_labeling, val_variant);
        if (bench->parsed()) return run_bench(bench_config, bench_out);
    } catch (const romancvd::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // no subcommand dispatched
}
