#include "forcing/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace forcing {

int resolve_workers(const SolveOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("FORCING_LAB_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

namespace {

constexpr int kMaxN = 62;

// Pascal's triangle up to n = 62; C(62,31) fits comfortably in 64 bits.
std::uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(kMaxN + 1);
        for (int i = 0; i <= kMaxN; ++i) {
            t[i].assign(i + 1, 1);
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

// Isolate-free feasibility bookkeeping for prefix extension. A prefix
// member with no prefix neighbor must still be reachable by a future
// (larger) vertex; once the candidate index passes its largest neighbor
// the whole subtree is dead.
struct IsolateFilter {
    const SimpleGraph& g;
    std::vector<VertexSet> isolated_at;      // per depth
    std::vector<VertexSet> doomed_beyond;    // doomed_beyond[v] = {u : max_nbr(u) <= v}

    explicit IsolateFilter(const SimpleGraph& graph, int k) : g(graph) {
        int n = g.vertex_count();
        isolated_at.assign(k + 1, VertexSet(n));
        doomed_beyond.assign(n, VertexSet(n));
        for (int v = 0; v < n; ++v) {
            int mx = g.neighbors(v).empty() ? -1 : g.neighbors(v).back();
            for (int w = std::max(mx, 0); w < n; ++w) doomed_beyond[w].add(v);
        }
    }

    // True iff extending the depth-j prefix with v can still reach an
    // isolate-free k-set. Updates isolated_at[j+1].
    bool admit(int j, int v, const VertexSet& chosen, int slots_left) {
        VertexSet& next = isolated_at[j + 1];
        next = isolated_at[j];
        next -= g.neighbor_set(v);
        if (!g.neighbor_set(v).intersects(chosen)) next.add(v);
        if (slots_left == 0) return next.empty();
        return !next.intersects(doomed_beyond[v]);
    }
};

// Walks k-subsets of {0..n-1} in lexicographic order within the rank
// window [lo, hi). visit(set, rank) returns false to stop early.
template <typename Visit>
void walk_subsets(const SimpleGraph& g, int k, std::uint64_t lo, std::uint64_t hi, IsolateFilter* filter,
                  Visit&& visit) {
    int n = g.vertex_count();
    VertexSet chosen(n);
    bool stopped = false;

    auto rec = [&](auto&& self, int depth, int from, std::uint64_t base) -> void {
        int remaining = k - depth;
        for (int v = from; v <= n - remaining && !stopped; ++v) {
            std::uint64_t subtree = binomial(n - 1 - v, remaining - 1);
            if (base >= hi) return;
            if (base + subtree <= lo) {
                base += subtree;
                continue;
            }
            if (filter && !filter->admit(depth, v, chosen, remaining - 1)) {
                base += subtree;
                continue;
            }
            chosen.add(v);
            if (remaining == 1) {
                if (base >= lo && !visit(chosen, base)) stopped = true;
            } else {
                self(self, depth + 1, v + 1, base);
            }
            chosen.remove(v);
            base += subtree;
        }
    };
    rec(rec, 0, 0, 0);
}

// Bounded memo of failed closures. A candidate equal to (or contained
// in) a known failed closure cannot force the whole graph.
struct FailureMemo {
    static constexpr std::size_t kCap = std::size_t{1} << 20;
    static constexpr int kRing = 32;
    std::unordered_set<VertexSet, VertexSetHash> failed;
    std::vector<VertexSet> ring;
    int ring_next = 0;

    bool known_failed(const VertexSet& s) const {
        if (failed.count(s)) return true;
        for (const auto& z : ring)
            if (s.is_subset_of(z)) return true;
        return false;
    }
    void record(const VertexSet& closure) {
        if (failed.size() < kCap) failed.insert(closure);
        if (ring.size() < kRing) {
            ring.push_back(closure);
        } else {
            ring[ring_next] = closure;
            ring_next = (ring_next + 1) % kRing;
        }
    }
};

struct StageOutcome {
    bool found = false;
    std::uint64_t best_rank = ~std::uint64_t{0};
    VertexSet witness;
    std::uint64_t candidates = 0; // meaningful only when !found (full scan)
};

StageOutcome run_stage(const SimpleGraph& g, int k, bool isolate_free, int workers) {
    int n = g.vertex_count();
    std::uint64_t total = binomial(n, k);
    StageOutcome out;
    if (total == 0) return out;

    std::uint64_t blocks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 16);
    std::uint64_t block_size = (total + blocks - 1) / blocks;

    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best_rank{~std::uint64_t{0}};
    std::vector<StageOutcome> per_worker(workers);

    auto body = [&](int wid) {
        StageOutcome& mine = per_worker[wid];
        ClosureEngine engine(g);
        FailureMemo memo;
        IsolateFilter filter(g, k);
        while (true) {
            std::uint64_t b = next_block.fetch_add(1);
            std::uint64_t lo = b * block_size;
            if (lo >= total) break;
            std::uint64_t hi = std::min(total, lo + block_size);
            if (best_rank.load(std::memory_order_relaxed) <= lo) continue;
            walk_subsets(g, k, lo, hi, isolate_free ? &filter : nullptr,
                         [&](const VertexSet& s, std::uint64_t rank) {
                             if (best_rank.load(std::memory_order_relaxed) <= rank) return false;
                             ++mine.candidates;
                             if (memo.known_failed(s)) return true;
                             if (engine.run(s)) {
                                 if (!mine.found || rank < mine.best_rank) {
                                     mine.found = true;
                                     mine.best_rank = rank;
                                     mine.witness = s;
                                 }
                                 // publish for cross-worker short-circuiting
                                 std::uint64_t cur = best_rank.load();
                                 while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
                                 }
                                 return false; // ranks ascend within a block
                             }
                             memo.record(engine.colored());
                             return true;
                         });
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }

    for (const auto& pw : per_worker) {
        out.candidates += pw.candidates;
        if (pw.found && (!out.found || pw.best_rank < out.best_rank)) {
            out.found = true;
            out.best_rank = pw.best_rank;
            out.witness = pw.witness;
        }
    }
    return out;
}

// Candidates a canonical sequential run enumerates at cardinality k up
// to and including `last_rank`.
std::uint64_t count_candidates(const SimpleGraph& g, int k, bool isolate_free, std::uint64_t last_rank) {
    std::uint64_t count = 0;
    IsolateFilter filter(g, k);
    walk_subsets(g, k, 0, last_rank + 1, isolate_free ? &filter : nullptr,
                 [&](const VertexSet&, std::uint64_t) {
                     ++count;
                     return true;
                 });
    return count;
}

SolveResult staged_search(const SimpleGraph& g, bool isolate_free, int first_k, const SolveOptions& opts) {
    int n = g.vertex_count();
    if (n > kMaxN) throw Error(errc::instance_too_large, "hard limit n <= 62");
    if (n > opts.soft_limit && !opts.force)
        throw Error(errc::instance_too_large,
                    "n = " + std::to_string(n) + " exceeds the soft limit " + std::to_string(opts.soft_limit) +
                        " (pass force to override)");
    int workers = resolve_workers(opts);

    SolveResult res;
    for (int k = first_k; k <= n; ++k) {
        StageOutcome stage = run_stage(g, k, isolate_free, workers);
        if (stage.found) {
            res.value = k;
            res.witness = stage.witness;
            res.subsets_tested += count_candidates(g, k, isolate_free, stage.best_rank);
            ClosureResult closure = forcing_closure(g, res.witness);
            res.trace = closure.trace;
            return res;
        }
        res.subsets_tested += stage.candidates;
    }
    throw Error(errc::partition_failure, "staged search exhausted all cardinalities"); // unreachable for valid input
}

} // namespace

SolveResult forcing_number(const SimpleGraph& g, const SolveOptions& opts) {
    if (g.vertex_count() < 1) throw Error(errc::bad_parameter, "forcing number needs n >= 1");
    return staged_search(g, /*isolate_free=*/false, /*first_k=*/1, opts);
}

SolveResult total_forcing_number(const SimpleGraph& g, const SolveOptions& opts) {
    if (g.vertex_count() < 2) throw Error(errc::bad_parameter, "total forcing number needs n >= 2");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw Error(errc::bad_parameter, "graph has an isolated vertex; no TF-set exists");
    // a single vertex is never isolate-free, so start at k = 2
    return staged_search(g, /*isolate_free=*/true, /*first_k=*/2, opts);
}

Observation1Result verify_observation1(const SimpleGraph& g, const SolveOptions& opts) {
    Observation1Result r;
    r.forcing = forcing_number(g, opts).value;
    r.total_forcing = total_forcing_number(g, opts).value;
    r.holds = r.forcing <= r.total_forcing && r.total_forcing <= 2 * r.forcing;
    return r;
}

std::string solve_result_to_json(const SolveResult& r) {
    nlohmann::json j;
    j["value"] = r.value;
    j["witness"] = r.witness.to_indices();
    j["subsets_tested"] = r.subsets_tested;
    return j.dump();
}

SolveResult solve_result_from_json(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("solve json: ") + e.what());
    }
    SolveResult r;
    try {
        r.value = j.at("value").get<int>();
        r.witness = VertexSet::from_indices(n, j.at("witness").get<std::vector<int>>());
        r.subsets_tested = j.at("subsets_tested").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("solve json: ") + e.what());
    }
    return r;
}

} // namespace forcing
