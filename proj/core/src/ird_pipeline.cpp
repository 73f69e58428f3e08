#include "romancvd/ird_pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "pipeline_internal.hpp"
#include "romancvd/cvd.hpp"

namespace romancvd {

namespace {

std::vector<char> neighbor_flags(const Graph& g, const std::vector<int>& part) {
    std::vector<char> f(g.num_vertices(), 0);
    for (int v : part)
        for (int u : g.neighbors(v)) f[u] = 1;
    return f;
}

void check_independent(const Graph& g, const std::vector<int>& part, const char* what) {
    for (int v : part)
        for (int u : g.neighbors(v))
            if (u > v && std::binary_search(part.begin(), part.end(), u))
                throw std::invalid_argument(std::string(what) + " is not independent: edge " +
                                            std::to_string(v) + "-" + std::to_string(u));
}

}  // namespace

bool check_guess_validity(const Graph& g, const ClusterDecomposition& decomp,
                          const std::vector<int>& s1, const std::vector<int>& s2) {
    std::vector<char> near1 = neighbor_flags(g, s1);
    std::vector<char> near2 = neighbor_flags(g, s2);
    for (const auto& clique : decomp.cliques) {
        bool all_deleted = true;
        bool orphan = false;  // needs a defender but the whole clique is gone
        for (int v : clique) {
            if (!near1[v] && !near2[v]) {
                all_deleted = false;
                break;
            }
            if (near1[v] && !near2[v]) orphan = true;
        }
        if (all_deleted && orphan) return false;
    }
    return true;
}

IrdGuessContext make_ird_guess_context(const Graph& g, const ClusterDecomposition& decomp,
                                       std::vector<int> s1, std::vector<int> s2,
                                       std::optional<int32_t> budget) {
    IrdGuessContext ctx;
    ctx.base = make_guess_context(g, decomp, std::move(s1), std::move(s2), budget);
    check_independent(g, ctx.base.s1, "s1");
    check_independent(g, ctx.base.s2, "s2");

    std::vector<char> near1 = neighbor_flags(g, ctx.base.s1);
    std::vector<char> near2 = neighbor_flags(g, ctx.base.s2);
    ctx.survivors.reserve(decomp.cliques.size());
    ctx.deleted_by_s1.reserve(decomp.cliques.size());
    for (const auto& clique : decomp.cliques) {
        std::vector<int> sur, lost;
        for (int v : clique) {
            if (near2[v]) continue;  // deleted via N[S2]
            if (near1[v])
                lost.push_back(v);  // deleted via N(S1) minus N[S2]
            else
                sur.push_back(v);
        }
        ctx.survivors.push_back(std::move(sur));
        ctx.deleted_by_s1.push_back(std::move(lost));
    }
    return ctx;
}

CliqueClassification classify_surviving_cliques(const IrdGuessContext& ctx) {
    CliqueClassification cls;
    cls.flags.reserve(ctx.survivors.size());
    cls.rho.reserve(ctx.survivors.size());
    for (size_t i = 0; i < ctx.survivors.size(); ++i) {
        const auto& sur = ctx.survivors[i];
        const bool lost = !ctx.deleted_by_s1[i].empty();
        if (sur.empty()) {
            if (lost)
                throw std::invalid_argument(
                    "invalid guess: clique " + std::to_string(i) +
                    " was fully deleted but a vertex lost to N(s1) has no defender");
            cls.flags.push_back(0);
            cls.rho.emplace_back();
            continue;
        }
        cls.flags.push_back(sur.size() >= 2 || lost ? 2 : 1);
        cls.rho.push_back(sur);
    }
    return cls;
}

ScpInstance build_ird_disjoint_cluster(const Graph& g, const IrdGuessContext& ctx,
                                       const CliqueClassification& cls) {
    if (cls.rho.size() != ctx.survivors.size())
        throw std::invalid_argument("classification does not match guess context");
    if (ctx.base.residual_budget && *ctx.base.residual_budget < 0)
        throw std::invalid_argument("negative residual budget: guess already infeasible");

    std::vector<int> elem(g.num_vertices(), -1);
    for (size_t i = 0; i < ctx.base.residual_s.size(); ++i)
        elem[ctx.base.residual_s[i]] = static_cast<int>(i);

    std::vector<uint32_t> family;
    std::vector<int> sizes, flags;
    for (size_t i = 0; i < cls.rho.size(); ++i) {
        if (cls.flags[i] == 0) continue;
        sizes.push_back(static_cast<int>(cls.rho[i].size()));
        flags.push_back(cls.flags[i]);
        for (int v : cls.rho[i]) {
            uint32_t mask = 0;
            for (int u : g.neighbors(v))
                if (elem[u] >= 0) mask |= 1u << elem[u];
            family.push_back(mask);
        }
    }
    return ScpInstance(static_cast<int>(ctx.base.residual_s.size()), std::move(family),
                       std::move(sizes), std::move(flags), ctx.base.residual_budget);
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
    uint64_t gap_repairs = 0;
};

// As the plain worker, but S2/S1 range over independent subsets only and
// each surviving clique is re-derived per S1. Cliques with at least two
// S2-surviving vertices are worth 2 under any valid S1 (two survivors give
// flag 2; one survivor means the other fell to S1, which also forces
// flag 2; zero survivors invalidate the guess), so the same flag-sum bound
// prunes against the incumbent.
void ird_worker(const Graph& g, const detail::ModulatorIndex& mi, const detail::CliqueIndex& ci,
                std::optional<int32_t> budget, uint64_t lo, uint64_t hi,
                std::atomic<int32_t>& incumbent, WorkerOut& out) {
    const int k = static_cast<int>(mi.s.size());
    const int q = ci.q;
    std::vector<uint32_t> internal(k);  // modulator-internal neighbors per position
    for (int i = 0; i < k; ++i) internal[i] = mi.closed[i] & ~(1u << i);

    // s2-surviving vertices, flattened per clique
    std::vector<int> sur_start(q + 1), sur_verts(ci.verts.size());
    std::vector<int> flags(q);
    std::vector<uint32_t> family;
    family.reserve(ci.verts.size());
    std::vector<int> sizes, bflags;
    std::vector<int> udense(std::max(k, 1), -1);

    auto independent = [&](uint32_t subset) {
        uint32_t rest = subset;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (internal[i] & subset) return false;
        }
        return true;
    };

    for (uint64_t s2w = lo; s2w < hi; ++s2w) {
        const uint32_t s2 = static_cast<uint32_t>(s2w);
        if (!independent(s2)) continue;  // skipped, not counted
        const uint32_t shat0 = mi.full & ~mi.closed_of(s2);
        const int base_cost = 2 * std::popcount(s2);

        int32_t flag_lb = 0;
        {
            int at_out = 0;
            for (int i = 0; i < q; ++i) {
                sur_start[i] = at_out;
                for (int at = ci.start[i]; at < ci.start[i + 1]; ++at)
                    if ((mi.vmask[ci.verts[at]] & s2) == 0) sur_verts[at_out++] = ci.verts[at];
                int cnt = at_out - sur_start[i];
                flag_lb += cnt >= 2 ? 2 : cnt;
            }
            sur_start[q] = at_out;
        }

        uint32_t s1 = 0;
        do {
            if (s1 != 0 && !independent(s1)) {
                s1 = (s1 - shat0) & shat0;
                continue;  // skipped, not counted
            }
            ++out.guesses;
            const int32_t lb0 = base_cost + std::popcount(s1);
            bool skip = budget && lb0 > *budget;
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
                sizes.clear();
                bflags.clear();
                bool valid = true;
                uint64_t repairs = 0;
                for (int i = 0; i < q && valid; ++i) {
                    int survivors = 0;
                    bool lost = false;
                    for (int at = sur_start[i]; at < sur_start[i + 1]; ++at) {
                        if (mi.vmask[sur_verts[at]] & s1) {
                            lost = true;
                        } else {
                            ++survivors;
                            family.push_back(compress(mi.vmask[sur_verts[at]]));
                        }
                    }
                    if (survivors == 0) {
                        if (lost) valid = false;  // orphaned deleted vertex
                        continue;
                    }
                    if (survivors == 1 && lost) ++repairs;
                    sizes.push_back(survivors);
                    bflags.push_back(survivors >= 2 || lost ? 2 : 1);
                }
                if (valid) {
                    out.gap_repairs += repairs;
                    ScpInstance inst(usize, family, sizes, bflags);
                    int32_t v = iscp_optimum_value(inst, out.cells);
                    if (v < kInfiniteValue) {
                        const int32_t total = v + lb0;
                        if (total < out.best.value) out.best = {total, s2, s1};
                        int32_t cur = incumbent.load(std::memory_order_relaxed);
                        while (total < cur && !incumbent.compare_exchange_weak(
                                                  cur, total, std::memory_order_relaxed)) {
                        }
                    }
                } else {
                    family.clear();
                }
            }
            s1 = (s1 - shat0) & shat0;
        } while (s1 != 0);
    }
}

}  // namespace

SolveResult solve_ird(const Graph& g, const std::vector<int>& s, const SolveOptions& opts) {
    std::vector<int> mod = s;
    std::sort(mod.begin(), mod.end());
    mod.erase(std::unique(mod.begin(), mod.end()), mod.end());
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
        ird_worker(g, mi, ci, opts.budget, chunks[0].first, chunks[0].second, incumbent, outs[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(chunks.size());
        for (size_t t = 0; t < chunks.size(); ++t)
            pool.emplace_back(ird_worker, std::cref(g), std::cref(mi), std::cref(ci), opts.budget,
                              chunks[t].first, chunks[t].second, std::ref(incumbent),
                              std::ref(outs[t]));
        for (auto& th : pool) th.join();
    }

    GuessWinner best;
    SolveResult res;
    for (const auto& w : outs) {
        res.stats.guesses_enumerated += w.guesses;
        res.stats.scp_cells += w.cells;
        res.stats.gap_repair_engaged += w.gap_repairs;
        if (w.best.value < best.value ||
            (w.best.value == best.value &&
             (w.best.s2 < best.s2 || (w.best.s2 == best.s2 && w.best.s1 < best.s1))))
            best = w.best;
    }

    if (best.value >= kInfiniteValue) {
        res.value = kInfiniteValue;
        res.feasible = false;
        return res;
    }

    res.s2 = mi.to_vertices(best.s2);
    res.s1 = mi.to_vertices(best.s1);
    IrdGuessContext ctx = make_ird_guess_context(g, decomp, res.s1, res.s2, std::nullopt);
    CliqueClassification cls = classify_surviving_cliques(ctx);
    ScpInstance inst = build_ird_disjoint_cluster(g, ctx, cls);
    DpSolution sol = solve_iscp(inst);
    res.stats.scp_cells += sol.cells;
    const int32_t lb0 = 2 * static_cast<int32_t>(res.s2.size()) + static_cast<int32_t>(res.s1.size());
    if (sol.value >= kInfiniteValue || sol.value + lb0 != best.value)
        throw std::logic_error("witness re-solve disagrees with enumeration value");

    std::vector<uint8_t> labels(g.num_vertices(), 0);
    for (int v : res.s2) labels[v] = 2;
    for (int v : res.s1) labels[v] = 1;
    std::vector<int> flat;          // family index -> vertex
    std::vector<int> block_clique;  // block index -> clique index
    for (size_t i = 0; i < cls.rho.size(); ++i) {
        if (cls.flags[i] == 0) continue;
        flat.insert(flat.end(), cls.rho[i].begin(), cls.rho[i].end());
        block_clique.push_back(static_cast<int>(i));
    }
    std::vector<char> touched(block_clique.size(), 0);
    for (int j : sol.witness) {
        labels[flat[j]] = 2;
        touched[inst.block_of(j)] = 1;
    }
    for (size_t b = 0; b < block_clique.size(); ++b) {
        int i = block_clique[b];
        if (cls.flags[i] == 1 && !touched[b]) labels[cls.rho[i][0]] = 1;
    }

    res.value = best.value;
    res.labeling = make_labeling(std::move(labels));
    if (res.labeling.weight != res.value || !validate_irdf(g, res.labeling))
        throw std::logic_error("reconstructed labeling fails validation");
    if (opts.budget) res.feasible = res.value <= *opts.budget;
    return res;
}

}  // namespace romancvd
