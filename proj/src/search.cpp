#include "proxgraph/search.h"

#include <algorithm>

namespace proxgraph {

namespace {

struct PlainPolicy {
    const Dataset& ds;
    std::span<const float> q;
    std::uint64_t dist_calls = 0;

    float distance(node_id, std::size_t, node_id v) {
        ++dist_calls;
        return squared_l2(q, ds.row(v));
    }
    void on_expand(node_id) {}
    void prefetch(node_id v) const { ds.prefetch(v); }
};

struct TracingPolicy {
    const Dataset& ds;
    std::span<const float> q;
    std::span<const std::uint32_t> ranks;
    SearchTrace& trace;

    float distance(node_id, std::size_t, node_id v) {
        ++trace.dist_count;
        return squared_l2(q, ds.row(v));
    }
    void on_expand(node_id u) {
        trace.expansion_order.push_back(u);
        if (!ranks.empty()) trace.max_rank_on_path = std::max(trace.max_rank_on_path, ranks[u]);
    }
};

void check_args(const ProximityGraph& g, const Dataset& ds, std::span<const float> q, std::size_t k,
                std::size_t L, node_id ep) {
    PROXGRAPH_REQUIRE_ARG(g.size() > 0, "empty graph");
    PROXGRAPH_REQUIRE_ARG(k >= 1 && k <= L, "need 1 <= k <= L (k=" + std::to_string(k) +
                                                    ", L=" + std::to_string(L) + ")");
    PROXGRAPH_REQUIRE_ARG(ep < g.size(), "entry point out of range");
    PROXGRAPH_REQUIRE_ARG(g.size() <= ds.size(), "graph larger than dataset");
    PROXGRAPH_REQUIRE_ARG(q.size() == ds.dim(), "query dimensionality mismatch");
}

NeighborList head(const CandidatePool& pool, std::size_t k) {
    const auto& e = pool.entries();
    return NeighborList(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(std::min(k, e.size())));
}

}  // namespace

NeighborList kann_search(const ProximityGraph& g, const Dataset& ds, std::span<const float> q, std::size_t k,
                         std::size_t L, node_id ep, SearchScratch* scratch, OpCounters* counters) {
    check_args(g, ds, q, k, L, ep);
    SearchScratch local;
    SearchScratch& s = scratch ? *scratch : local;
    PlainPolicy policy{ds, q};
    detail::run_beam(g, L, ep, s, policy);
    if (counters) counters->distance += policy.dist_calls;
    return head(s.pool, k);
}

SearchTrace kann_search_instrumented(const ProximityGraph& g, const Dataset& ds, std::span<const float> q,
                                     std::size_t k, std::size_t L, node_id ep,
                                     std::span<const std::uint32_t> ranks) {
    check_args(g, ds, q, k, L, ep);
    PROXGRAPH_REQUIRE_ARG(ranks.empty() || ranks.size() == g.size(), "rank table size mismatch");
    SearchScratch s;
    SearchTrace trace;
    TracingPolicy policy{ds, q, ranks, trace};
    detail::run_beam(g, L, ep, s, policy);
    trace.results = head(s.pool, k);
    return trace;
}

NeighborList search_excluding_self(const ProximityGraph& g, const Dataset& ds, node_id self, std::size_t k,
                                   std::size_t L, node_id ep, SearchScratch& scratch, OpCounters* counters) {
    const std::size_t width = std::max(L, k + 1);
    const auto q = ds.row(self);
    check_args(g, ds, q, k, width, ep);
    PlainPolicy policy{ds, q};
    detail::run_beam(g, width, ep, scratch, policy);
    if (counters) counters->distance += policy.dist_calls;
    NeighborList out;
    out.reserve(k);
    for (const auto& nb : scratch.pool.entries()) {
        if (nb.id == self) continue;
        out.push_back(nb);
        if (out.size() == k) break;
    }
    return out;
}

node_id layered_descent(const LayeredGraph& lg, const Dataset& ds, std::span<const float> q,
                        std::size_t stop_layer, SearchScratch& scratch, OpCounters* counters) {
    node_id w = lg.entry_point();
    for (std::size_t i = lg.top_layer(); i > stop_layer; --i) {
        w = kann_search(lg.layer(i), ds, q, 1, 1, w, &scratch, counters)[0].id;
    }
    return w;
}

NeighborList layered_search(const LayeredGraph& lg, const Dataset& ds, std::span<const float> q, std::size_t k,
                            std::size_t L, SearchScratch* scratch, OpCounters* counters) {
    PROXGRAPH_REQUIRE_ARG(lg.num_layers() > 0 && lg.size() > 0, "empty layered graph");
    SearchScratch local;
    SearchScratch& s = scratch ? *scratch : local;
    const node_id start = layered_descent(lg, ds, q, 0, s, counters);
    return kann_search(lg.layer(0), ds, q, k, L, start, &s, counters);
}

}  // namespace proxgraph
