#include "proxgraph/nsg_builder.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numeric>
#include <random>

#include "proxgraph/oracle.h"
#include "proxgraph/search.h"

namespace proxgraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ProximityGraph graph_from_lists(const std::vector<NeighborList>& lists, std::size_t max_degree) {
    ProximityGraph g(lists.size(), max_degree);
    for (std::size_t u = 0; u < lists.size(); ++u) g.set_neighbors(static_cast<node_id>(u), ids_of(lists[u]));
    return g;
}

// Dense per-thread view of one node's previous distances: slot v is valid
// when stamp[v] equals the current generation.
struct DistanceMemo {
    std::vector<float> dist;
    std::vector<std::uint32_t> stamp;
    std::uint32_t gen = 0;

    void load(std::size_t n, const SeenList& seen) {
        if (stamp.size() != n) {
            dist.assign(n, 0.0f);
            stamp.assign(n, 0);
            gen = 0;
        }
        if (++gen == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            gen = 1;
        }
        for (const auto& e : seen) {
            dist[e.id] = e.dist;
            stamp[e.id] = gen;
        }
    }
};

// Beam search for row `self` recording expansions and, optionally, every
// distance evaluated; distances held in `memo` are not recomputed.
struct CnaSearchPolicy {
    const Dataset& ds;
    std::span<const float> q;
    const DistanceMemo* memo;
    SeenList* next;
    std::vector<node_id>& expanded;
    std::uint64_t dist_calls = 0;

    float distance(node_id, std::size_t, node_id v) {
        float d;
        if (memo && memo->stamp[v] == memo->gen) {
            d = memo->dist[v];
        } else {
            ++dist_calls;
            d = squared_l2(q, ds.row(v));
        }
        if (next) next->push_back({v, d});
        return d;
    }
    void on_expand(node_id u) { expanded.push_back(u); }
    void prefetch(node_id v) const {
        if (!memo || memo->stamp[v] != memo->gen) ds.prefetch(v);
    }
};

// Search phase of OptKCNA over all nodes. `seen_prev`/`seen_next` enable the
// search-side reuse.
void search_all(const ProximityGraph& g, const Dataset& ds, const CnaParams& p, const CnaState& prev_state,
                CnaState& out, const std::vector<SeenList>* seen_prev, std::vector<SeenList>* seen_next,
                OpCounters& counters) {
    const std::size_t n = g.size();
    out.lists.assign(n, {});
    out.expanded.assign(n, {});
    if (seen_next) seen_next->assign(n, {});
    const std::size_t width = std::max(p.L, p.k + 1);
    std::uint64_t calls = 0;
    const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel reduction(+ : calls)
    {
        SearchScratch scratch;
        DistanceMemo memo;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < ni; ++i) {
            const auto u = static_cast<node_id>(i);
            const bool reuse = seen_prev && !seen_prev->empty();
            if (reuse) memo.load(n, (*seen_prev)[u]);
            SeenList* next = seen_next ? &(*seen_next)[u] : nullptr;
            if (next && reuse) next->reserve((*seen_prev)[u].size());
            CnaSearchPolicy policy{ds, ds.row(u), reuse ? &memo : nullptr, next, out.expanded[u]};
            detail::run_beam(g, width, u, scratch, policy);
            calls += policy.dist_calls;

            auto& list = out.lists[u];
            list.reserve(p.k);
            for (const auto& e : scratch.pool.entries()) {
                if (e.id == u) continue;
                if (list.size() == p.k) break;
                list.emplace_back(e.id, e.dist);
            }
            // Fresh: absent from the previous C(u).
            const auto& old = prev_state.lists[u];
            std::vector<node_id> old_ids = ids_of(old);
            std::sort(old_ids.begin(), old_ids.end());
            for (auto& e : list) e.fresh = !std::binary_search(old_ids.begin(), old_ids.end(), e.id);
        }
    }
    counters.distance += calls;
}

CnaState run_round(const CnaState& state, const Dataset& ds, const CnaParams& params, RefineMemo* memo,
                   const std::vector<SeenList>* seen_prev, std::vector<SeenList>* seen_next, IterationStats* stats,
                   ProximityGraph* graph_out) {
    params.validate();
    PROXGRAPH_REQUIRE_ARG(state.lists.size() == ds.size(), "candidate table does not match dataset");
    const auto t0 = Clock::now();
    RefineOptions ro;
    ro.prune = PruneParams::alpha(params.max_degree, params.alpha_degrees);
    ro.connect = params.connect;
    ro.entry_point = state.entry_point;
    ro.connect_width = params.connect_width;
    RefineStats rs;
    ProximityGraph g = refine(state.lists, ds, ro, &rs, memo);

    CnaState out;
    out.iteration = state.iteration + 1;
    out.entry_point = state.entry_point;
    OpCounters search;
    search_all(g, ds, params, state, out, seen_prev, seen_next, search);

    if (stats) {
        stats->iteration = out.iteration;
        stats->refine = rs.prune;
        stats->connect = rs.connect;
        stats->bridges = rs.bridges;
        stats->search = search;
        stats->mean_degree = g.mean_degree();
        stats->seconds = seconds_since(t0);
    }
    if (graph_out) *graph_out = std::move(g);
    return out;
}

}  // namespace

void CnaParams::validate() const {
    PROXGRAPH_REQUIRE_ARG(k >= 1, "k must be positive");
    PROXGRAPH_REQUIRE_ARG(k <= L, "need k <= L (k=" + std::to_string(k) + ", L=" + std::to_string(L) + ")");
    PROXGRAPH_REQUIRE_ARG(max_degree >= 1, "M must be positive");
    PROXGRAPH_REQUIRE_ARG(alpha_degrees >= 60.0 && alpha_degrees < 180.0, "alpha must be in [60, 180)");
}

CnaState cna_from_knng(const Dataset& ds, KnngState knng, std::size_t k, std::size_t L, std::uint64_t seed,
                       OpCounters* counters) {
    PROXGRAPH_REQUIRE_ARG(knng.lists.size() == ds.size(), "KNNG does not match dataset");
    CnaState st;
    const ProximityGraph g = graph_from_lists(knng.lists, knng.k0);
    st.entry_point = entry_point(ds, g, std::min(k, L), L, seed, counters);
    st.lists = std::move(knng.lists);
    for (auto& l : st.lists) {
        for (auto& e : l) e.fresh = true;
    }
    return st;
}

CnaState opt_kcna(const CnaState& state, const Dataset& ds, const CnaParams& params, IterationStats* stats,
                  ProximityGraph* graph_out) {
    return run_round(state, ds, params, nullptr, nullptr, nullptr, stats, graph_out);
}

CnaState opt_kcna_cached(CnaState state, const Dataset& ds, const CnaParams& params, IterationStats* stats,
                         ProximityGraph* graph_out) {
    RefineMemo memo = std::move(state.memo);
    std::vector<SeenList> seen_prev = std::move(state.seen);
    std::vector<SeenList> seen_next;
    CnaState out = run_round(state, ds, params, &memo, &seen_prev, &seen_next, stats, graph_out);
    out.memo = std::move(memo);
    out.seen = std::move(seen_next);
    return out;
}

std::size_t sample_size(std::size_t n, double epsilon, double l, bool log2) {
    PROXGRAPH_REQUIRE_ARG(epsilon > 0.0 && epsilon <= 1.0, "epsilon must be in (0, 1]");
    PROXGRAPH_REQUIRE_ARG(l >= 1.0, "l must be >= 1");
    const double lg = log2 ? std::log2(static_cast<double>(n)) : std::log(static_cast<double>(n));
    return static_cast<std::size_t>(std::ceil((8.0 + 2.0 * epsilon) * l * lg / (epsilon * epsilon)));
}

std::vector<node_id> sample_nodes(std::size_t n, std::size_t n_s, std::uint64_t seed) {
    PROXGRAPH_REQUIRE_ARG(n_s <= n, "cannot sample more nodes than exist");
    std::vector<node_id> all(n);
    std::iota(all.begin(), all.end(), node_id{0});
    std::vector<node_id> out;
    out.reserve(n_s);
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), static_cast<std::ptrdiff_t>(n_s), rng);
    return out;
}

QualityEstimate estimate_quality(const CnaState& state, const Dataset& ds, double epsilon, double l,
                                 std::size_t k, std::uint64_t seed, bool log2) {
    const std::size_t n = state.lists.size();
    PROXGRAPH_REQUIRE_ARG(n == ds.size() && n >= 2, "candidate table does not match dataset");
    PROXGRAPH_REQUIRE_ARG(k >= 1 && k < n, "need 1 <= k < n");
    QualityEstimate est;
    est.epsilon = epsilon;
    est.l = l;
    const std::size_t bound = sample_size(n, epsilon, l, log2);
    est.n_s = std::min(bound, n);
    est.guaranteed = est.n_s >= bound;

    est.samples = sample_nodes(n, est.n_s, seed);

    std::vector<double> r(est.samples.size());
    const auto ns = static_cast<std::int64_t>(est.samples.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < ns; ++i) {
        const node_id u = est.samples[static_cast<std::size_t>(i)];
        const auto truth = ids_of(exact_knn(ds, ds.row(u), k, u));
        const auto& c = state.lists[u];
        std::vector<node_id> got;
        for (std::size_t j = 0; j < std::min(k, c.size()); ++j) got.push_back(c[j].id);
        r[static_cast<std::size_t>(i)] = recall_at_k(got, truth, k);
    }
    double sum = 0.0;
    for (double x : r) sum += x;
    est.r_hat = r.empty() ? 0.0 : sum / static_cast<double>(r.size());
    return est;
}

double cna_recall(const std::vector<NeighborList>& lists, const std::vector<NeighborList>& exact, std::size_t k) {
    PROXGRAPH_REQUIRE_ARG(lists.size() == exact.size() && !lists.empty(), "table size mismatch");
    double sum = 0.0;
    for (std::size_t u = 0; u < lists.size(); ++u) {
        std::vector<node_id> got;
        for (std::size_t j = 0; j < std::min(k, lists[u].size()); ++j) got.push_back(lists[u][j].id);
        std::vector<node_id> truth;
        for (std::size_t j = 0; j < k; ++j) truth.push_back(exact[u][j].id);
        sum += recall_at_k(got, truth, k);
    }
    return sum / static_cast<double>(lists.size());
}

ProximityGraph build_nsg_original(const Dataset& ds, const NsgParams& p, BuildReport* report) {
    PROXGRAPH_REQUIRE_ARG(p.k >= 1 && p.k <= p.L, "need 1 <= k <= L");
    PROXGRAPH_REQUIRE_ARG(p.max_degree >= 1, "M must be positive");
    PROXGRAPH_REQUIRE_ARG(p.knng.k0 < ds.size(), "need k0 < n");
    BuildReport rep;
    const auto t_all = Clock::now();

    auto t0 = Clock::now();
    KnngParams kp = p.knng;
    kp.seed = p.seed;
    KnngState knng = build_knng(ds, kp);
    rep.knng = knng.counters;
    rep.knng_seconds = seconds_since(t0);

    t0 = Clock::now();
    const ProximityGraph gk = graph_from_lists(knng.lists, knng.k0);
    knng.lists.clear();
    const node_id ep = entry_point(ds, gk, p.k, p.L, p.seed + 1, &rep.search);
    const std::size_t n = ds.size();
    std::vector<NeighborList> cands(n);
    std::uint64_t calls = 0;
    const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel reduction(+ : calls)
    {
        SearchScratch scratch;
        OpCounters c;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < ni; ++i) {
            const auto u = static_cast<node_id>(i);
            cands[u] = search_excluding_self(gk, ds, u, std::min(p.k, n - 1), p.L, ep, scratch, &c);
        }
        calls += c.distance;
    }
    rep.search.distance += calls;
    rep.search_seconds = seconds_since(t0);

    t0 = Clock::now();
    RefineOptions ro;
    ro.prune = PruneParams::rng(p.max_degree);
    ro.connect = true;
    ro.entry_point = ep;
    ro.connect_width = p.connect_width;
    ProximityGraph g = refine(cands, ds, ro, &rep.refine);
    rep.refine_seconds = seconds_since(t0);
    rep.entry_point = ep;
    rep.total_seconds = seconds_since(t_all);
    if (report) *report = std::move(rep);
    return g;
}

ProximityGraph build_fastnsg(const Dataset& ds, const FastNsgParams& p, BuildReport* report) {
    CnaParams cp;
    cp.k = p.k;
    cp.L = p.L;
    cp.max_degree = p.max_degree;
    cp.alpha_degrees = p.alpha_degrees;
    cp.connect = p.connect;
    cp.connect_width = p.connect_width;
    cp.validate();
    PROXGRAPH_REQUIRE_ARG(p.max_iters >= 1, "need at least one iteration");
    PROXGRAPH_REQUIRE_ARG(p.knng.k0 < ds.size(), "need k0 < n");
    PROXGRAPH_REQUIRE_ARG(!p.target_recall || (*p.target_recall >= 0.0 && *p.target_recall <= 1.0),
                          "target recall must be in [0, 1]");
    if (p.target_recall) sample_size(ds.size(), p.epsilon, p.l);  // validates epsilon, l
    BuildReport rep;
    const auto t_all = Clock::now();

    auto t0 = Clock::now();
    KnngParams kp = p.knng;
    kp.seed = p.seed;
    KnngState knng = build_knng(ds, kp);
    rep.knng = knng.counters;
    rep.knng_seconds = seconds_since(t0);

    t0 = Clock::now();
    const std::size_t k_eff = std::min(p.k, ds.size() - 1);
    cp.k = k_eff;
    CnaState state = cna_from_knng(ds, std::move(knng), k_eff, p.L, p.seed + 1, &rep.search);

    std::future<QualityEstimate> pending;
    std::optional<double> latest;
    for (std::size_t it = 1;; ++it) {
        IterationStats st;
        state = p.cached ? opt_kcna_cached(std::move(state), ds, cp, &st) : opt_kcna(state, ds, cp, &st);
        rep.search += st.search;
        rep.refine.prune += st.refine;
        rep.refine.connect += st.connect;
        rep.refine.bridges += st.bridges;
        bool done = it >= p.max_iters;
        if (p.target_recall) {
            const std::uint64_t seed = p.seed + 1000 + it;
            if (p.async_quality) {
                if (pending.valid()) latest = pending.get().r_hat;
                CnaState snapshot;
                snapshot.lists = state.lists;
                pending = std::async(std::launch::async, [&ds, p, k_eff, seed, snap = std::move(snapshot)] {
                    return estimate_quality(snap, ds, p.epsilon, p.l, k_eff, seed, p.log2_samples);
                });
            } else {
                latest = estimate_quality(state, ds, p.epsilon, p.l, k_eff, seed, p.log2_samples).r_hat;
            }
            st.r_hat = latest;
            if (latest && *latest >= *p.target_recall) done = true;
        }
        rep.iterations.push_back(st);
        if (done) break;
    }
    if (pending.valid()) pending.wait();
    rep.search_seconds = seconds_since(t0);

    t0 = Clock::now();
    RefineOptions ro;
    ro.prune = PruneParams::rng(p.max_degree);
    ro.connect = p.connect;
    ro.entry_point = state.entry_point;
    ro.connect_width = p.connect_width;
    state.memo = {};
    state.seen.clear();
    ProximityGraph g = refine(state.lists, ds, ro, &rep.refine);
    if (p.keep_candidates) rep.candidates = std::move(state.lists);
    rep.refine_seconds = seconds_since(t0);
    rep.entry_point = state.entry_point;
    rep.total_seconds = seconds_since(t_all);
    if (report) *report = std::move(rep);
    return g;
}

}  // namespace proxgraph
