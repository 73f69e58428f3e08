// Acceptance gate: every release-blocking property in one binary, one
// PASS/FAIL line each. Returns nonzero if anything fails. The brute-force
// referees come from testutil.hpp and oracle.hpp and share no code with the
// solvers under test.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "romancvd/cvd.hpp"
#include "romancvd/generators.hpp"
#include "romancvd/ird_pipeline.hpp"
#include "romancvd/oracle.hpp"
#include "romancvd/rd_pipeline.hpp"
#include "romancvd/result_json.hpp"
#include "romancvd/rng.hpp"
#include "romancvd/scp.hpp"
#include "testutil.hpp"

using namespace romancvd;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---- shared corpus for criteria 1, 2 and 8 ----------------------------------

struct CorpusEntry {
    GeneratedInstance inst;
    int32_t rd_value = -1;   // filled by criterion 1
    int32_t ird_value = -1;  // filled by criterion 2
    RomanLabeling ird_labeling;
};

std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> c = [] {
        std::vector<CorpusEntry> out;
        for (int cliques : {1, 2, 3})
            for (int k : {0, 1, 2, 3, 4})
                for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                    for (uint64_t seed : {1, 2, 3, 4, 5}) {
                        const int smax = std::max(1, (10 - k) / cliques);
                        CorpusEntry e;
                        e.inst = gen_cluster_plus_k(cliques, {1, smax}, k, p, seed);
                        out.push_back(std::move(e));
                    }
        return out;
    }();
    return c;
}

Outcome criterion_rd_oracle() {
    int n = 0;
    for (auto& e : corpus()) {
        if (e.inst.graph.num_vertices() > 10) return {false, "corpus graph exceeds 10 vertices"};
        SolveResult got = solve_rd(e.inst.graph, e.inst.cvd_set);
        OracleResult want = brute_force_rd(e.inst.graph);
        e.rd_value = got.value;
        if (got.value != want.value)
            return {false, "value mismatch on corpus graph " + std::to_string(n) + ": solver " +
                               std::to_string(got.value) + ", brute force " +
                               std::to_string(want.value)};
        if (!validate_rdf(e.inst.graph, got.labeling) || got.labeling.weight != got.value)
            return {false, "invalid labeling on corpus graph " + std::to_string(n)};
        ++n;
    }
    return {true, std::to_string(n) + " graphs, values and labelings agree"};
}

Outcome criterion_ird_oracle() {
    int n = 0;
    uint64_t repairs = 0;
    for (auto& e : corpus()) {
        SolveResult got = solve_ird(e.inst.graph, e.inst.cvd_set);
        OracleResult want = brute_force_ird(e.inst.graph);
        e.ird_value = got.value;
        e.ird_labeling = got.labeling;
        repairs += got.stats.gap_repair_engaged;
        if (got.value != want.value)
            return {false, "value mismatch on corpus graph " + std::to_string(n) + ": solver " +
                               std::to_string(got.value) + ", brute force " +
                               std::to_string(want.value)};
        if (!validate_irdf(e.inst.graph, got.labeling) || got.labeling.weight != got.value)
            return {false, "invalid labeling on corpus graph " + std::to_string(n)};
        ++n;
    }
    if (repairs == 0) return {false, "corpus never engaged the forced flag-2 repair"};
    return {true, std::to_string(n) + " graphs agree; repair engaged " +
                      std::to_string(repairs) + " times"};
}

// ---- criterion 3: set cover dp against 2^m enumeration ----------------------

ScpInstance random_cover_instance(SplitMix64& rng, const std::vector<int>& flags) {
    const int universe = static_cast<int>(rng.next_below(7));  // 0..6
    const int per_block_max = flags.size() >= 4 ? 2 : 3;
    std::vector<int> sizes;
    std::vector<uint32_t> family;
    for (size_t b = 0; b < flags.size(); ++b) {
        const int sz = 1 + static_cast<int>(rng.next_below(per_block_max));
        sizes.push_back(sz);
        for (int i = 0; i < sz; ++i) {
            uint32_t mask = 0;
            for (int e = 0; e < universe; ++e)
                if (rng.next_bernoulli(0.4)) mask |= 1u << e;
            family.push_back(mask);
        }
    }
    return ScpInstance(universe, family, sizes, flags, std::nullopt);
}

Outcome criterion_cover_dp() {
    SplitMix64 rng(33);
    int checked = 0;

    auto check_one = [&](const ScpInstance& inst, bool independent) -> std::string {
        if (inst.num_sets() > 10) return "instance exceeds 10 sets";
        const int32_t want = testutil::brute_partitioned_cover(inst, independent);
        DpSolution got = independent ? solve_iscp(inst) : solve_scp(inst);
        if (got.value != want)
            return "value mismatch: dp " + std::to_string(got.value) + ", enumeration " +
                   std::to_string(want);
        if (got.value < kInfiniteValue) {
            const bool valid = independent ? iscp_selection_valid(inst, got.witness)
                                           : scp_selection_valid(inst, got.witness);
            if (!valid) return "witness fails the feasibility check";
            if (scp_objective(inst, got.witness) != got.value)
                return "witness recomputes to a different value";
        }
        ++checked;
        return "";
    };

    // every flag vector up to three blocks, several instances each
    for (int q = 1; q <= 3; ++q) {
        std::vector<int> flags(q);
        int combos = 1;
        for (int i = 0; i < q; ++i) combos *= 3;
        for (int code = 0; code < combos; ++code) {
            int rest = code;
            for (int i = 0; i < q; ++i) {
                flags[i] = rest % 3;
                rest /= 3;
            }
            const bool iscp_ok =
                std::find(flags.begin(), flags.end(), 0) == flags.end();
            for (int rep = 0; rep < 8; ++rep) {
                std::string err = check_one(random_cover_instance(rng, flags), false);
                if (!err.empty()) return {false, err};
                if (iscp_ok) {
                    err = check_one(random_cover_instance(rng, flags), true);
                    if (!err.empty()) return {false, err};
                }
            }
        }
    }
    // free-form random instances, one to four blocks
    for (int trial = 0; trial < 400; ++trial) {
        const int q = 1 + static_cast<int>(rng.next_below(4));
        std::vector<int> flags(q), iflags(q);
        for (int i = 0; i < q; ++i) {
            flags[i] = static_cast<int>(rng.next_below(3));
            iflags[i] = 1 + static_cast<int>(rng.next_below(2));
        }
        std::string err = check_one(random_cover_instance(rng, flags), false);
        if (!err.empty()) return {false, err};
        err = check_one(random_cover_instance(rng, iflags), true);
        if (!err.empty()) return {false, err};
    }
    if (checked < 1000)
        return {false, "only " + std::to_string(checked) + " instances checked"};
    return {true, std::to_string(checked) + " instances, dp equals enumeration"};
}

// ---- criterion 4: split-graph reduction ties weight to hitting sets ---------

Outcome criterion_reduction() {
    SplitMix64 rng(404);
    int checked = 0;
    auto check_one = [&](int u, const std::vector<std::vector<int>>& sets) -> std::string {
        const int tau = brute_force_hitting_set(u, sets);
        ReductionResult red = hitting_set_to_rd_instance(u, sets);
        OracleResult rd = brute_force_rd(red.graph, red.graph.num_vertices());
        if (rd.value != 2 * tau)
            return "universe " + std::to_string(u) + ", " + std::to_string(sets.size()) +
                   " sets: weight " + std::to_string(rd.value) + " but hitting number " +
                   std::to_string(tau);
        ++checked;
        return "";
    };
    auto random_sets = [&](int u, int f) {
        std::vector<std::vector<int>> sets(f);
        for (auto& set : sets) {
            const int size = 1 + static_cast<int>(rng.next_below(std::min(3, u)));
            while (static_cast<int>(set.size()) < size) {
                int e = static_cast<int>(rng.next_below(u));
                if (std::find(set.begin(), set.end(), e) == set.end()) set.push_back(e);
            }
        }
        return sets;
    };

    // the extremes of both ranges, then a random spread below 18 vertices
    std::string err = check_one(2, random_sets(2, 8));
    if (!err.empty()) return {false, err};
    err = check_one(8, random_sets(8, 3));
    if (!err.empty()) return {false, err};
    while (checked < 110) {
        int u, f;
        do {
            u = 2 + static_cast<int>(rng.next_below(7));
            f = 1 + static_cast<int>(rng.next_below(8));
        } while (u + 2 * f > 17);
        err = check_one(u, random_sets(u, f));
        if (!err.empty()) return {false, err};
    }
    return {true, std::to_string(checked) + " reductions, weight = 2 x hitting number"};
}

// ---- criterion 5: closed forms and the frozen path table --------------------

Outcome criterion_closed_forms() {
    for (int n = 2; n <= 8; ++n) {
        Graph kn = testutil::complete_graph(n);
        if (solve_rd(kn, {}).value != 2)
            return {false, "complete graph on " + std::to_string(n) + ": rd weight is not 2"};
        if (solve_ird(kn, {}).value != 2)
            return {false, "complete graph on " + std::to_string(n) + ": ird weight is not 2"};
    }
    // frozen from a brute-force oracle run; both variants coincide on paths
    const int golden[13] = {0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8};
    for (int n = 1; n <= 12; ++n) {
        Graph pn = testutil::path_graph(n);
        auto s = find_cvd(pn, n);
        if (!s) return {false, "no deletion set found for the path on " + std::to_string(n)};
        const int32_t rd = solve_rd(pn, *s).value;
        const int32_t ird = solve_ird(pn, *s).value;
        const int32_t oracle_rd = brute_force_rd(pn).value;
        const int32_t oracle_ird = brute_force_ird(pn).value;
        if (rd != golden[n] || oracle_rd != golden[n])
            return {false, "path on " + std::to_string(n) + ": rd " + std::to_string(rd) +
                               ", oracle " + std::to_string(oracle_rd) + ", golden " +
                               std::to_string(golden[n])};
        if (ird != golden[n] || oracle_ird != golden[n])
            return {false, "path on " + std::to_string(n) + ": ird " + std::to_string(ird) +
                               ", oracle " + std::to_string(oracle_ird) + ", golden " +
                               std::to_string(golden[n])};
    }
    return {true, "complete graphs 2..8 and paths 1..12 match the pinned values"};
}

// ---- criterion 6: scaling budget with an analytic guess count ---------------

uint64_t analytic_guess_count(const Graph& g, const std::vector<int>& s) {
    const int k = static_cast<int>(s.size());
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < k; ++i) pos[s[i]] = i;
    std::vector<uint32_t> closed(k);
    for (int i = 0; i < k; ++i) {
        closed[i] = 1u << i;
        for (int w : g.neighbors(s[i]))
            if (pos[w] >= 0) closed[i] |= 1u << pos[w];
    }
    uint64_t total = 0;
    for (uint32_t s2 = 0; s2 < (1u << k); ++s2) {
        uint32_t killed = 0;
        uint32_t rest = s2;
        while (rest) {
            killed |= closed[std::countr_zero(rest)];
            rest &= rest - 1;
        }
        total += uint64_t(1) << (k - std::popcount(killed | s2));
    }
    return total;
}

Outcome criterion_scaling() {
    GeneratedInstance inst = gen_cluster_plus_k(500, {10, 10}, 14, 0.02, 6);
    const auto t0 = std::chrono::steady_clock::now();
    SolveOptions opts;
    opts.threads = 4;
    SolveResult res = solve_rd(inst.graph, inst.cvd_set, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const uint64_t want = analytic_guess_count(inst.graph, inst.cvd_set);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "5000 clique vertices, modulator 14: weight %d in %.1fs, %llu guesses",
                  res.value, secs, static_cast<unsigned long long>(res.stats.guesses_enumerated));
    if (res.stats.guesses_enumerated != want)
        return {false, std::string(buf) + " but the subset identity demands " +
                           std::to_string(want)};
    if (secs >= 120.0) return {false, std::string(buf) + " (budget is 120s)"};
    if (!validate_rdf(inst.graph, res.labeling))
        return {false, "labeling on the scaling instance is invalid"};
    return {true, buf};
}

// ---- criterion 7: byte-identical output across runs and thread counts -------

Outcome criterion_determinism() {
    int fixtures = 0;
    for (int variant = 0; variant < 2; ++variant) {
        for (int i = 0; i < 10; ++i) {
            const int cliques = 4 + 4 * (i % 5);
            const int k = 4 + i % 2;
            const double p = i % 2 ? 0.55 : 0.3;
            const uint64_t seed = 700 + i + 100 * variant;
            GeneratedInstance inst = gen_cluster_plus_k(cliques, {1, 4}, k, p, seed);
            const bool budgeted = i == 3;
            std::string first;
#ifdef ROMANCVD_CLI_PATH
            testutil::TempFile graph(serialize_graph(inst.graph));
            std::string cvd_text;
            for (size_t j = 0; j < inst.cvd_set.size(); ++j)
                cvd_text += (j ? " " : "") + std::to_string(inst.cvd_set[j]);
            testutil::TempFile cvd(cvd_text + "\n");
            for (int threads : {1, 4}) {
                for (int rep = 0; rep < 3; ++rep) {
                    std::string cmd = std::string("solve ") + (variant ? "ird" : "rd") +
                                      " --graph " + graph.path() + " --cvd " + cvd.path() +
                                      " --json --threads " + std::to_string(threads);
                    if (budgeted) cmd += " --budget 8";
                    auto run = testutil::run_cli(cmd);
                    if (run.exit_code != 0 && run.exit_code != 1)
                        return {false, "solver exited with " + std::to_string(run.exit_code) +
                                           " on fixture " + std::to_string(fixtures)};
                    if (first.empty())
                        first = run.out;
                    else if (run.out != first)
                        return {false, "output differs on fixture " + std::to_string(fixtures) +
                                           " at " + std::to_string(threads) + " threads"};
                }
            }
#else
            for (int threads : {1, 4}) {
                for (int rep = 0; rep < 3; ++rep) {
                    SolveOptions opts;
                    opts.threads = threads;
                    if (budgeted) opts.budget = 8;
                    SolveResult res = variant ? solve_ird(inst.graph, inst.cvd_set, opts)
                                              : solve_rd(inst.graph, inst.cvd_set, opts);
                    std::string out = solve_result_to_json(res, variant ? "ird" : "rd");
                    if (first.empty())
                        first = out;
                    else if (out != first)
                        return {false, "output differs on fixture " + std::to_string(fixtures) +
                                           " at " + std::to_string(threads) + " threads"};
                }
            }
#endif
            ++fixtures;
        }
    }
    return {true, std::to_string(fixtures) +
                      " fixtures, 3 runs x {1,4} threads all byte-identical"};
}

// ---- criterion 8: structural invariants --------------------------------------

Outcome criterion_invariants() {
    // independent weight dominates the plain weight on the whole corpus
    int idx = 0;
    for (auto& e : corpus()) {
        if (e.rd_value < 0) e.rd_value = solve_rd(e.inst.graph, e.inst.cvd_set).value;
        if (e.ird_value < 0) {
            SolveResult r = solve_ird(e.inst.graph, e.inst.cvd_set);
            e.ird_value = r.value;
            e.ird_labeling = r.labeling;
        }
        if (e.rd_value > e.ird_value)
            return {false, "corpus graph " + std::to_string(idx) +
                               ": plain weight exceeds independent weight"};
        // inside any clique of the remainder, at most one nonzero label
        ClusterDecomposition d = clique_components(e.inst.graph, e.inst.cvd_set);
        for (const auto& clique : d.cliques) {
            int nonzero = 0;
            for (int v : clique)
                if (e.ird_labeling.labels[v] != 0) ++nonzero;
            if (nonzero > 1)
                return {false, "corpus graph " + std::to_string(idx) +
                                   ": a clique carries two nonzero labels"};
        }
        ++idx;
    }

    // cover values ignore the order blocks are listed in
    SplitMix64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 1 + static_cast<int>(rng.next_below(4));
        std::vector<int> flags(q);
        for (int i = 0; i < q; ++i) flags[i] = static_cast<int>(rng.next_below(3));
        ScpInstance inst = random_cover_instance(rng, flags);
        std::vector<int> perm(q);
        for (int b = 0; b < q; ++b) perm[b] = b;
        for (int b = q - 1; b > 0; --b)
            std::swap(perm[b], perm[rng.next_below(static_cast<uint64_t>(b) + 1)]);
        std::vector<uint32_t> family;
        std::vector<int> sizes, pflags;
        for (int b : perm) {
            sizes.push_back(inst.block_sizes()[b]);
            pflags.push_back(inst.block_flags()[b]);
            for (int i = 0; i < inst.block_sizes()[b]; ++i)
                family.push_back(inst.family()[inst.block_start(b) + i]);
        }
        ScpInstance shuffled(inst.universe_size(), family, sizes, pflags, std::nullopt);
        uint64_t cells = 0;
        if (scp_optimum_value(inst, cells) != scp_optimum_value(shuffled, cells))
            return {false, "block permutation changed a cover value on trial " +
                               std::to_string(trial)};
    }
    return {true, std::to_string(idx) +
                      " corpus graphs ordered correctly, cliques clean, 200 permutations stable"};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"rd solver equals brute force", criterion_rd_oracle},
        {"ird solver equals brute force", criterion_ird_oracle},
        {"cover dp equals subset enumeration", criterion_cover_dp},
        {"split reduction doubles hitting number", criterion_reduction},
        {"closed forms and pinned path table", criterion_closed_forms},
        {"scaling budget and guess-count identity", criterion_scaling},
        {"byte-identical output across runs/threads", criterion_determinism},
        {"weight order, clique support, block order", criterion_invariants},
    };

    bool all = true;
    int id = 1;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.fn();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id,
                    e.name, out.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && out.pass;
        ++id;
    }
    std::printf("%s\n", all ? "all criteria passed" : "ACCEPTANCE FAILED");
    return all ? 0 : 1;
}
