#include "romancvd/rd_pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "pipeline_internal.hpp"
#include "romancvd/cvd.hpp"

namespace romancvd {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_subset_of_s(const ClusterDecomposition& decomp, const std::vector<int>& part,
                       const char* what) {
    for (int v : part)
        if (!std::binary_search(decomp.cvd_set.begin(), decomp.cvd_set.end(), v))
            throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                        " is not in the modulator");
}

}  // namespace

GuessContext make_guess_context(const Graph& g, const ClusterDecomposition& decomp,
                                std::vector<int> s1, std::vector<int> s2,
                                std::optional<int32_t> budget) {
    GuessContext ctx;
    ctx.s1 = sorted_unique(std::move(s1));
    ctx.s2 = sorted_unique(std::move(s2));
    check_subset_of_s(decomp, ctx.s1, "s1");
    check_subset_of_s(decomp, ctx.s2, "s2");

    std::vector<char> killed(g.num_vertices(), 0);  // N[s2], restricted to S below
    for (int v : ctx.s2) {
        killed[v] = 1;
        for (int u : g.neighbors(v)) killed[u] = 1;
    }
    for (int v : ctx.s1)
        if (killed[v])
            throw std::invalid_argument("s1 vertex " + std::to_string(v) +
                                        " lies in the closed neighborhood of s2");
    for (int v : ctx.s1) killed[v] = 1;
    for (int v : decomp.cvd_set)
        if (!killed[v]) ctx.residual_s.push_back(v);
    if (budget)
        ctx.residual_budget = *budget - 2 * static_cast<int32_t>(ctx.s2.size()) -
                              static_cast<int32_t>(ctx.s1.size());
    return ctx;
}

CliqueClassification classify_cliques(const Graph& g, const ClusterDecomposition& decomp,
                                      const std::vector<int>& s2) {
    std::vector<char> in_s2(g.num_vertices(), 0);
    for (int v : s2) in_s2[v] = 1;

    CliqueClassification cls;
    cls.flags.reserve(decomp.cliques.size());
    cls.rho.reserve(decomp.cliques.size());
    for (const auto& clique : decomp.cliques) {
        int undominated = 0;
        int leader = -1;
        for (int v : clique) {
            bool dom = false;
            for (int u : g.neighbors(v)) {
                if (in_s2[u]) {
                    dom = true;
                    break;
                }
            }
            if (!dom) {
                if (++undominated == 1) leader = v;
            }
        }
        int flag = undominated >= 2 ? 2 : undominated;
        std::vector<int> rho;
        rho.reserve(clique.size());
        if (flag == 1) {
            rho.push_back(leader);
            for (int v : clique)
                if (v != leader) rho.push_back(v);
        } else {
            rho = clique;
        }
        cls.flags.push_back(flag);
        cls.rho.push_back(std::move(rho));
    }
    return cls;
}

ScpInstance build_rd_disjoint_cluster(const Graph& g, const ClusterDecomposition& decomp,
                                      const GuessContext& ctx, const CliqueClassification& cls) {
    if (cls.rho.size() != decomp.cliques.size())
        throw std::invalid_argument("classification does not match decomposition");
    if (ctx.residual_budget && *ctx.residual_budget < 0)
        throw std::invalid_argument("negative residual budget: guess already infeasible");

    std::vector<int> elem(g.num_vertices(), -1);
    for (size_t i = 0; i < ctx.residual_s.size(); ++i) elem[ctx.residual_s[i]] = static_cast<int>(i);

    std::vector<uint32_t> family;
    std::vector<int> sizes;
    for (size_t i = 0; i < cls.rho.size(); ++i) {
        if (cls.rho[i].size() != decomp.cliques[i].size())
            throw std::invalid_argument("rho is not a reordering of clique " + std::to_string(i));
        sizes.push_back(static_cast<int>(cls.rho[i].size()));
        for (int v : cls.rho[i]) {
            uint32_t mask = 0;
            for (int u : g.neighbors(v))
                if (elem[u] >= 0) mask |= 1u << elem[u];
            family.push_back(mask);
        }
    }
    return ScpInstance(static_cast<int>(ctx.residual_s.size()), std::move(family),
                       std::move(sizes), cls.flags, ctx.residual_budget);
}

namespace {

struct GuessWinner {
    int32_t value = kInfiniteValue;
    uint32_t s2 = 0, s1 = 0;
};

struct WorkerOut {
    GuessWinner best;
    uint64_t guesses = 0;
    uint64_t cells = 0;
};

// One worker scans s2 masks in [lo, hi). Classification is hoisted per s2;
// the per-clique flag sum is a lower bound on any SCP value under that s2,
// which lets whole s1 subtrees prune against the shared incumbent without
// running their DP. Guesses that prune still count as enumerated.
void rd_worker(const Graph& g, const detail::ModulatorIndex& mi, const detail::CliqueIndex& ci,
               std::optional<int32_t> budget, uint64_t lo, uint64_t hi,
               std::atomic<int32_t>& incumbent, WorkerOut& out) {
    const int k = static_cast<int>(mi.s.size());
    const int q = ci.q;
    std::vector<int> flags(q), leader_at(q);
    std::vector<uint32_t> family;
    family.reserve(ci.verts.size());
    std::vector<int> sizes(q);
    std::vector<int> udense(std::max(k, 1), -1);

    for (int i = 0; i < q; ++i) sizes[i] = ci.start[i + 1] - ci.start[i];

    for (uint64_t s2w = lo; s2w < hi; ++s2w) {
        const uint32_t s2 = static_cast<uint32_t>(s2w);
        const uint32_t shat0 = mi.full & ~mi.closed_of(s2);
        const int base_cost = 2 * std::popcount(s2);

        int32_t flag_lb = 0;
        for (int i = 0; i < q; ++i) {
            int undominated = 0, lead = -1;
            for (int at = ci.start[i]; at < ci.start[i + 1]; ++at) {
                if ((mi.vmask[ci.verts[at]] & s2) == 0) {
                    if (++undominated == 1) lead = at;
                    if (undominated == 2) break;
                }
            }
            flags[i] = undominated >= 2 ? 2 : undominated;
            leader_at[i] = lead;
            flag_lb += flags[i] == 2 ? 2 : flags[i];
        }

        const uint64_t inner_total = uint64_t(1) << std::popcount(shat0);
        if (base_cost + flag_lb > incumbent.load(std::memory_order_relaxed) && !budget) {
            out.guesses += inner_total;  // every s1 under this s2 prunes
            continue;
        }

        uint32_t s1 = 0;
        do {
            ++out.guesses;
            const int32_t lb0 = base_cost + std::popcount(s1);
            bool skip = budget && lb0 > *budget;  // negative residual budget
            if (!skip && lb0 + flag_lb > incumbent.load(std::memory_order_relaxed)) skip = true;
            if (!skip) {
                const uint32_t ubits = shat0 & ~s1;
                const int usize = std::popcount(ubits);
                {
                    uint32_t rest = ubits;
                    int idx = 0;
                    while (rest) {
                        udense[std::countr_zero(rest)] = idx++;
                        rest &= rest - 1;
                    }
                }
                auto compress = [&](uint32_t m) {
                    uint32_t dense = 0, rest = m & ubits;
                    while (rest) {
                        dense |= 1u << udense[std::countr_zero(rest)];
                        rest &= rest - 1;
                    }
                    return dense;
                };
                family.clear();
                for (int i = 0; i < q; ++i) {
                    if (flags[i] == 1) {
                        family.push_back(compress(mi.vmask[ci.verts[leader_at[i]]]));
                        for (int at = ci.start[i]; at < ci.start[i + 1]; ++at)
                            if (at != leader_at[i]) family.push_back(compress(mi.vmask[ci.verts[at]]));
                    } else {
                        for (int at = ci.start[i]; at < ci.start[i + 1]; ++at)
                            family.push_back(compress(mi.vmask[ci.verts[at]]));
                    }
                }
                ScpInstance inst(usize, family, sizes, flags);
                int32_t v = scp_optimum_value(inst, out.cells);
                if (v < kInfiniteValue) {
                    const int32_t total = v + lb0;
                    if (total < out.best.value) out.best = {total, s2, s1};
                    int32_t cur = incumbent.load(std::memory_order_relaxed);
                    while (total < cur &&
                           !incumbent.compare_exchange_weak(cur, total, std::memory_order_relaxed)) {
                    }
                }
            }
            s1 = (s1 - shat0) & shat0;
        } while (s1 != 0);
    }
}

}  // namespace

SolveResult solve_rd(const Graph& g, const std::vector<int>& s, const SolveOptions& opts) {
    std::vector<int> mod = sorted_unique(s);
    if (!verify_cvd(g, mod))
        throw std::invalid_argument("supplied set is not a cluster vertex deletion set");
    const ClusterDecomposition decomp = clique_components(g, mod);
    const int k = static_cast<int>(mod.size());
    if (k > 25)
        throw std::invalid_argument("modulator of size " + std::to_string(k) +
                                    " exceeds the enumeration limit of 25");

    const auto mi = detail::ModulatorIndex::build(g, mod);
    const auto ci = detail::CliqueIndex::build(decomp);

    auto chunks = detail::subset_chunks(k, opts.threads);
    std::vector<WorkerOut> outs(chunks.size());
    std::atomic<int32_t> incumbent{kInfiniteValue};
    if (chunks.size() == 1) {
        rd_worker(g, mi, ci, opts.budget, chunks[0].first, chunks[0].second, incumbent, outs[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(chunks.size());
        for (size_t t = 0; t < chunks.size(); ++t)
            pool.emplace_back(rd_worker, std::cref(g), std::cref(mi), std::cref(ci), opts.budget,
                              chunks[t].first, chunks[t].second, std::ref(incumbent),
                              std::ref(outs[t]));
        for (auto& th : pool) th.join();
    }

    GuessWinner best;
    SolveResult res;
    for (const auto& w : outs) {
        res.stats.guesses_enumerated += w.guesses;
        res.stats.scp_cells += w.cells;
        if (w.best.value < best.value ||
            (w.best.value == best.value &&
             (w.best.s2 < best.s2 || (w.best.s2 == best.s2 && w.best.s1 < best.s1))))
            best = w.best;
    }

    if (best.value >= kInfiniteValue) {
        res.value = kInfiniteValue;
        res.feasible = false;  // only reachable under decision-mode pruning
        return res;
    }

    // Re-solve the winning guess through the public path, with witness.
    res.s2 = mi.to_vertices(best.s2);
    res.s1 = mi.to_vertices(best.s1);
    GuessContext ctx = make_guess_context(g, decomp, res.s1, res.s2, std::nullopt);
    CliqueClassification cls = classify_cliques(g, decomp, res.s2);
    ScpInstance inst = build_rd_disjoint_cluster(g, decomp, ctx, cls);
    DpSolution sol = solve_scp(inst);
    res.stats.scp_cells += sol.cells;
    const int32_t lb0 = 2 * static_cast<int32_t>(res.s2.size()) + static_cast<int32_t>(res.s1.size());
    if (sol.value >= kInfiniteValue || sol.value + lb0 != best.value)
        throw std::logic_error("witness re-solve disagrees with enumeration value");

    std::vector<uint8_t> labels(g.num_vertices(), 0);
    for (int v : res.s2) labels[v] = 2;
    for (int v : res.s1) labels[v] = 1;
    std::vector<int> flat;
    flat.reserve(ci.verts.size());
    for (const auto& r : cls.rho) flat.insert(flat.end(), r.begin(), r.end());
    std::vector<char> touched(decomp.cliques.size(), 0);
    for (int j : sol.witness) {
        labels[flat[j]] = 2;
        touched[inst.block_of(j)] = 1;
    }
    for (size_t i = 0; i < decomp.cliques.size(); ++i)
        if (cls.flags[i] == 1 && !touched[i]) labels[cls.rho[i][0]] = 1;

    res.value = best.value;
    res.labeling = make_labeling(std::move(labels));
    if (res.labeling.weight != res.value || !validate_rdf(g, res.labeling))
        throw std::logic_error("reconstructed labeling fails validation");
    if (opts.budget) res.feasible = res.value <= *opts.budget;
    return res;
}

}  // namespace romancvd
