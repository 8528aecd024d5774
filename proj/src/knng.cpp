#include "proxgraph/knng.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <string>
#include <numeric>
#include <random>

namespace proxgraph {

namespace {

// Independent, thread-count-free random stream per (seed, node, stream).
std::minstd_rand node_rng(std::uint64_t seed, std::uint64_t node, std::uint64_t stream) {
    std::uint64_t x = seed ^ (node * 0x9e3779b97f4a7c15ULL) ^ (stream * 0xc2b2ae3d27d4eb4fULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return std::minstd_rand(static_cast<std::uint32_t>(x % 2147483646ULL) + 1);
}

// Inserts into a full ascending fixed-size list if `cand` precedes the last
// entry and its id is absent.
bool update_list(NeighborList& list, const Neighbor& cand) {
    if (list.empty() || !closer(cand, list.back())) return false;
    for (const auto& e : list) {
        if (e.id == cand.id) return false;
    }
    auto it = std::upper_bound(list.begin(), list.end(), cand, closer);
    list.insert(it, Neighbor(cand.id, cand.dist, true));
    list.pop_back();
    return true;
}

}  // namespace

KnngState knng_init_random(const Dataset& ds, std::size_t k0, std::uint64_t seed) {
    const std::size_t n = ds.size();
    PROXGRAPH_REQUIRE_ARG(k0 >= 1 && k0 < n, "need 1 <= k0 < n (k0=" + std::to_string(k0) +
                                                     ", n=" + std::to_string(n) + ")");
    KnngState st;
    st.k0 = k0;
    st.seed = seed;
    st.lists.resize(n);
    std::uint64_t dist_calls = 0;
    const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : dist_calls)
    for (std::int64_t i = 0; i < ni; ++i) {
        const auto u = static_cast<node_id>(i);
        auto rng = node_rng(seed, u, 0);
        std::vector<node_id> picks;
        picks.reserve(k0);
        if (2 * k0 >= n) {
            std::vector<node_id> all;
            all.reserve(n - 1);
            for (std::size_t v = 0; v < n; ++v) {
                if (v != u) all.push_back(static_cast<node_id>(v));
            }
            std::shuffle(all.begin(), all.end(), rng);
            picks.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k0));
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            while (picks.size() < k0) {
                const auto v = static_cast<node_id>(pick(rng));
                if (v == u || std::find(picks.begin(), picks.end(), v) != picks.end()) continue;
                picks.push_back(v);
            }
        }
        auto& list = st.lists[u];
        list.reserve(k0);
        for (node_id v : picks) list.emplace_back(v, squared_l2(ds.row(u), ds.row(v)), true);
        dist_calls += k0;
        sort_neighbors(list);
    }
    st.counters.distance += dist_calls;
    return st;
}

std::size_t knng_descent_iterate(KnngState& st, const Dataset& ds) {
    const std::size_t n = st.lists.size();
    const std::size_t k0 = st.k0;
    const std::size_t round = ++st.iteration;
    const auto sample = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(st.sample_rate * static_cast<double>(k0))));

    // Forward samples: up to `sample` fresh entries (random choice when more
    // exist) become this round's new set and lose their fresh bit; all
    // non-fresh entries form the old set.
    std::vector<std::vector<node_id>> fwd_new(n), fwd_old(n);
    const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < ni; ++i) {
        auto& list = st.lists[static_cast<std::size_t>(i)];
        std::vector<std::size_t> fresh_slots;
        for (std::size_t j = 0; j < list.size(); ++j) {
            if (list[j].fresh) {
                fresh_slots.push_back(j);
            } else {
                fwd_old[static_cast<std::size_t>(i)].push_back(list[j].id);
            }
        }
        if (fresh_slots.size() > sample) {
            auto rng = node_rng(st.seed, static_cast<std::uint64_t>(i), 2 * round);
            std::shuffle(fresh_slots.begin(), fresh_slots.end(), rng);
            fresh_slots.resize(sample);
            std::sort(fresh_slots.begin(), fresh_slots.end());
        }
        for (std::size_t j : fresh_slots) {
            fwd_new[static_cast<std::size_t>(i)].push_back(list[j].id);
            list[j].fresh = false;
        }
    }

    // Reverse lists, gathered in source-id order then capped at `sample`.
    std::vector<std::vector<node_id>> rev_new(n), rev_old(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (node_id v : fwd_new[u]) rev_new[v].push_back(static_cast<node_id>(u));
        for (node_id v : fwd_old[u]) rev_old[v].push_back(static_cast<node_id>(u));
    }
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < ni; ++i) {
        const auto u = static_cast<std::size_t>(i);
        for (auto* r : {&rev_new[u], &rev_old[u]}) {
            if (r->size() > sample) {
                auto rng = node_rng(st.seed, u, 2 * round + 1 + (r == &rev_old[u] ? 1000003u : 0u));
                std::shuffle(r->begin(), r->end(), rng);
                r->resize(sample);
            }
        }
    }

    // Join sets: new = fwd_new ∪ rev_new; old = (fwd_old ∪ rev_old) \ new.
    std::vector<std::vector<node_id>> join_new(n), join_old(n);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < ni; ++i) {
        const auto u = static_cast<std::size_t>(i);
        auto& nw = join_new[u];
        nw = fwd_new[u];
        nw.insert(nw.end(), rev_new[u].begin(), rev_new[u].end());
        std::sort(nw.begin(), nw.end());
        nw.erase(std::unique(nw.begin(), nw.end()), nw.end());
        auto& od = join_old[u];
        od = fwd_old[u];
        od.insert(od.end(), rev_old[u].begin(), rev_old[u].end());
        std::sort(od.begin(), od.end());
        od.erase(std::unique(od.begin(), od.end()), od.end());
        std::vector<node_id> diff;
        std::set_difference(od.begin(), od.end(), nw.begin(), nw.end(), std::back_inserter(diff));
        od.swap(diff);
    }
    fwd_new.clear();
    fwd_old.clear();
    rev_new.clear();
    rev_old.clear();

    // Local joins. Each proposal goes straight into the target list under
    // that list's lock; a list ends the round holding the best k0 distinct
    // ids of its old entries and all proposals, whatever the arrival order.
    std::vector<std::vector<node_id>> before(n);
    for (std::size_t u = 0; u < n; ++u) {
        before[u] = ids_of(st.lists[u]);
        std::sort(before[u].begin(), before[u].end());
    }
    std::vector<std::atomic<float>> worst(n);
    for (std::size_t u = 0; u < n; ++u) worst[u].store(st.lists[u].back().dist, std::memory_order_relaxed);
    std::vector<std::mutex> locks(n);
    auto propose = [&](node_id target, const Neighbor& nb) {
        if (nb.dist > worst[target].load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> guard(locks[target]);
        auto& list = st.lists[target];
        if (update_list(list, nb)) worst[target].store(list.back().dist, std::memory_order_relaxed);
    };

    std::uint64_t dist_calls = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : dist_calls)
    for (std::int64_t c = 0; c < ni; ++c) {
        const auto& nw = join_new[static_cast<std::size_t>(c)];
        const auto& od = join_old[static_cast<std::size_t>(c)];
        auto consider = [&](node_id a, node_id b) {
            ++dist_calls;
            const float d = squared_l2(ds.row(a), ds.row(b));
            propose(a, Neighbor(b, d));
            propose(b, Neighbor(a, d));
        };
        for (std::size_t x = 0; x < nw.size(); ++x) {
            for (std::size_t y = x + 1; y < nw.size(); ++y) consider(nw[x], nw[y]);
            for (node_id o : od) {
                if (o != nw[x]) consider(nw[x], o);
            }
        }
    }
    st.counters.distance += dist_calls;

    std::size_t updates = 0;
#pragma omp parallel for schedule(static) reduction(+ : updates)
    for (std::int64_t i = 0; i < ni; ++i) {
        const auto u = static_cast<std::size_t>(i);
        for (const auto& e : st.lists[u]) {
            if (!std::binary_search(before[u].begin(), before[u].end(), e.id)) ++updates;
        }
    }
    return updates;
}

KnngState build_knng(const Dataset& ds, const KnngParams& params) {
    PROXGRAPH_REQUIRE_ARG(params.sample_rate > 0.0 && params.sample_rate <= 1.0, "sample rate must be in (0, 1]");
    auto st = knng_init_random(ds, params.k0, params.seed);
    st.sample_rate = params.sample_rate;
    const double threshold = params.early_stop * static_cast<double>(ds.size()) * static_cast<double>(params.k0);
    for (std::size_t it = 0; it < params.iters; ++it) {
        const auto updates = knng_descent_iterate(st, ds);
        if (static_cast<double>(updates) < threshold) break;
    }
    return st;
}

}  // namespace proxgraph
