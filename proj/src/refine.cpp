#include "proxgraph/refine.h"

#include <algorithm>
#include <random>

#include "proxgraph/search.h"

namespace proxgraph {

namespace {

std::vector<node_id> to_ids(const NeighborList& l) { return ids_of(l); }

// Runs one pruning phase over all nodes. Counters are reduced per thread and
// summed; the lists themselves are written to disjoint slots.
std::vector<NeighborList> prune_all(const std::vector<NeighborList>& cands, const Dataset& ds,
                                    const PruneParams& params, std::vector<PruneRecord>* records,
                                    bool use_prev, OpCounters& total) {
    const auto n = static_cast<std::int64_t>(cands.size());
    std::vector<NeighborList> out(cands.size());
    std::uint64_t dist = 0, angle = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : dist, angle)
    for (std::int64_t i = 0; i < n; ++i) {
        OpCounters c;
        if (records) {
            PruneRecord next;
            const PruneRecord* prev = use_prev ? &(*records)[static_cast<std::size_t>(i)] : nullptr;
            out[static_cast<std::size_t>(i)] =
                    prune_with_record(ds, cands[static_cast<std::size_t>(i)], params, prev, next, &c);
            (*records)[static_cast<std::size_t>(i)] = std::move(next);
        } else {
            out[static_cast<std::size_t>(i)] = prune(ds, cands[static_cast<std::size_t>(i)], params, &c);
        }
        dist += c.distance;
        angle += c.angle;
    }
    total.distance += dist;
    total.angle += angle;
    return out;
}

}  // namespace

std::size_t connect_from(ProximityGraph& g, const Dataset& ds, node_id entry_point, std::size_t width,
                         OpCounters* counters) {
    auto reached = g.reachable_from(entry_point);
    SearchScratch scratch;
    std::size_t added = 0;
    std::vector<node_id> stack;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto v = static_cast<node_id>(i);
        if (reached[v]) continue;
        const auto found = kann_search(g, ds, ds.row(v), 1, std::max<std::size_t>(width, 1), entry_point,
                                       &scratch, counters);
        g.add_bridge(found[0].id, v);
        ++added;
        reached[v] = true;
        stack.assign(1, v);
        while (!stack.empty()) {
            const node_id u = stack.back();
            stack.pop_back();
            for (node_id w : g.neighbors(u)) {
                if (!reached[w]) {
                    reached[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return added;
}

ProximityGraph refine_with_lists(const std::vector<NeighborList>& candidates, const Dataset& ds,
                                 const RefineOptions& options, std::vector<NeighborList>& lists,
                                 RefineStats* stats, RefineMemo* memo) {
    options.prune.validate();
    const std::size_t n = candidates.size();
    PROXGRAPH_REQUIRE_ARG(n > 0 && n <= ds.size(), "candidate table does not match dataset");
    RefineStats local;

    const bool use_prev = memo && memo->primed;
    if (memo && !memo->primed) {
        memo->forward.assign(n, {});
        memo->reverse.assign(n, {});
    }

    // Phase A.
    auto forward = prune_all(candidates, ds, options.prune, memo ? &memo->forward : nullptr, use_prev,
                             local.prune);

    // Reverse edges: v -> u for every u -> v, gathered in source-id order.
    std::vector<NeighborList> merged(forward);
    for (std::size_t u = 0; u < n; ++u) {
        for (const auto& nb : forward[u]) {
            merged[nb.id].emplace_back(static_cast<node_id>(u), nb.dist);
        }
    }
    for (auto& l : merged) {
        sort_neighbors(l);
        l.erase(std::unique(l.begin(), l.end(), [](const Neighbor& a, const Neighbor& b) { return a.id == b.id; }),
                l.end());
    }

    // Phase B.
    lists = prune_all(merged, ds, options.prune, memo ? &memo->reverse : nullptr, use_prev, local.prune);
    if (memo) memo->primed = true;

    ProximityGraph g(n, options.prune.max_degree);
    for (std::size_t u = 0; u < n; ++u) g.set_neighbors(static_cast<node_id>(u), to_ids(lists[u]));
    PROXGRAPH_REQUIRE_ARG(options.entry_point < n, "entry point out of range");
    g.set_entry_point(options.entry_point);

    // Phase C.
    if (options.connect) {
        local.bridges = connect_from(g, ds, options.entry_point, options.connect_width, &local.connect);
    }
    if (stats) {
        stats->prune += local.prune;
        stats->connect += local.connect;
        stats->bridges += local.bridges;
    }
    return g;
}

ProximityGraph refine(const std::vector<NeighborList>& candidates, const Dataset& ds,
                      const RefineOptions& options, RefineStats* stats, RefineMemo* memo) {
    std::vector<NeighborList> lists;
    return refine_with_lists(candidates, ds, options, lists, stats, memo);
}

node_id entry_point(const Dataset& ds, const ProximityGraph& g, std::size_t k, std::size_t L,
                    std::uint64_t seed, OpCounters* counters) {
    PROXGRAPH_REQUIRE_ARG(g.size() > 0, "empty graph");
    std::mt19937_64 rng(seed);
    const auto start = static_cast<node_id>(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
    const auto c = ds.centroid();
    return kann_search(g, ds, c, k, L, start, nullptr, counters)[0].id;
}

}  // namespace proxgraph
