#include "proxgraph/hnsw_builder.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "proxgraph/prune.h"
#include "proxgraph/search.h"

namespace proxgraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double resolve_m_factor(double m, std::size_t max_degree) {
    return m > 0.0 ? m : default_m_factor(max_degree);
}

}  // namespace

double default_m_factor(std::size_t max_degree) {
    return max_degree < 2 ? 1.0 : 1.0 / std::log(static_cast<double>(max_degree));
}

LayerAssignment assign_layers(std::size_t n, double m_factor, std::uint64_t seed) {
    PROXGRAPH_REQUIRE_ARG(m_factor > 0.0, "m_factor must be positive");
    PROXGRAPH_REQUIRE_ARG(n >= 1, "need at least one node");
    LayerAssignment a;
    a.m_factor = m_factor;
    a.levels.resize(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t u = 0; u < n; ++u) {
        const double x = 1.0 - unif(rng);  // (0, 1]
        const double l = std::floor(-std::log(x) * m_factor);
        a.levels[u] = static_cast<std::uint32_t>(std::min(l, 63.0));
        a.max_level = std::max(a.max_level, a.levels[u]);
    }
    return a;
}

LayeredGraph build_hnsw_original(const Dataset& ds, const HnswParams& p, HnswReport* report) {
    PROXGRAPH_REQUIRE_ARG(p.ef >= 1, "ef must be positive");
    PROXGRAPH_REQUIRE_ARG(p.max_degree >= 1, "M must be positive");
    const auto t0 = Clock::now();
    const std::size_t n = ds.size();
    const auto assign = assign_layers(n, resolve_m_factor(p.m_factor, p.max_degree), p.seed);
    LayeredGraph lg(assign.levels, p.max_degree);
    const std::size_t layers = lg.num_layers();

    // Working lists with distances; layer graphs mirror their ids.
    std::vector<std::vector<NeighborList>> adj(layers, std::vector<NeighborList>(n));
    HnswReport rep;
    if (p.record_candidates) rep.insertion_candidates.assign(n, {});
    SearchScratch scratch;
    OpCounters& c = rep.counters;

    auto sync = [&](std::size_t layer, node_id u) {
        lg.layer(layer).set_neighbors(u, ids_of(adj[layer][u]));
    };

    node_id ep = 0;
    std::uint32_t top = assign.levels[0];
    for (std::size_t ui = 1; ui < n; ++ui) {
        const auto u = static_cast<node_id>(ui);
        const auto q = ds.row(u);
        const std::uint32_t lu = assign.levels[u];
        node_id w = ep;
        for (std::uint32_t i = top; i > lu; --i) {
            w = kann_search(lg.layer(i), ds, q, 1, 1, w, &scratch, &c)[0].id;
        }
        for (std::int64_t i = std::min(lu, top); i >= 0; --i) {
            const auto layer = static_cast<std::size_t>(i);
            auto& g = lg.layer(layer);
            NeighborList found = kann_search(g, ds, q, p.ef, p.ef, w, &scratch, &c);
            if (layer == 0 && p.record_candidates) rep.insertion_candidates[u] = found;
            w = found[0].id;
            adj[layer][u] = prune(ds, found, PruneParams::rng(p.max_degree), &c);
            sync(layer, u);
            for (const auto& nb : adj[layer][u]) {
                auto& list = adj[layer][nb.id];
                auto pos = std::upper_bound(list.begin(), list.end(), Neighbor(u, nb.dist), closer);
                list.insert(pos, Neighbor(u, nb.dist));
                if (list.size() > p.max_degree) list = prune(ds, list, PruneParams::rng(p.max_degree), &c);
                sync(layer, nb.id);
            }
        }
        if (lu > top) {
            top = lu;
            ep = u;
        }
    }
    lg.set_entry_point(ep);
    for (std::size_t i = 0; i < layers; ++i) lg.layer(i).set_entry_point(ep);
    rep.seconds = seconds_since(t0);
    if (report) *report = std::move(rep);
    return lg;
}

LayeredGraph build_fasthnsw(const Dataset& ds, const FastHnswParams& p, FastHnswReport* report) {
    PROXGRAPH_REQUIRE_ARG(p.ef >= 1, "ef must be positive");
    PROXGRAPH_REQUIRE_ARG(p.max_degree >= 1, "M must be positive");
    const auto t0 = Clock::now();
    const std::size_t n = ds.size();
    const auto assign = assign_layers(n, resolve_m_factor(p.m_factor, p.max_degree), p.seed);
    LayeredGraph lg(assign.levels, p.max_degree);
    const std::size_t layers = lg.num_layers();

    const auto top_members = lg.layer_members(layers - 1);
    std::mt19937_64 rng(p.seed + 7);
    const node_id ep =
            top_members[std::uniform_int_distribution<std::size_t>(0, top_members.size() - 1)(rng)];
    lg.set_entry_point(ep);

    FastHnswReport rep;
    rep.layers.resize(layers);
    for (std::int64_t i = static_cast<std::int64_t>(layers) - 1; i >= 0; --i) {
        const auto layer = static_cast<std::size_t>(i);
        const auto members = lg.layer_members(layer);
        auto& g = lg.layer(layer);
        g.set_entry_point(ep);
        if (members.size() <= p.max_degree) {
            for (node_id u : members) {
                NeighborList all;
                for (node_id v : members) {
                    if (v != u) all.emplace_back(v, squared_l2(ds.row(u), ds.row(v)));
                }
                sort_neighbors(all);
                g.set_neighbors(u, ids_of(all));
                if (layer == 0 && p.record_candidates) {
                    if (rep.layer0_candidates.empty()) rep.layer0_candidates.assign(n, {});
                    rep.layer0_candidates[u] = std::move(all);
                }
            }
            continue;
        }
        const Dataset sub = ds.subset(members);
        const std::size_t m = members.size();
        FastNsgParams fp;
        fp.knng = p.knng;
        fp.knng.k0 = std::min(p.knng.k0, m - 1);
        fp.k = std::min(p.ef, m - 1);
        fp.L = p.ef;
        fp.max_degree = p.max_degree;
        fp.alpha_degrees = p.alpha_degrees;
        fp.max_iters = p.max_iters;
        fp.cached = p.cached;
        fp.connect = p.layer_connect;
        fp.seed = p.seed + 31 * (layer + 1);
        fp.keep_candidates = layer == 0 && p.record_candidates;
        const ProximityGraph local = build_fastnsg(sub, fp, &rep.layers[layer]);

        std::vector<std::uint32_t> bridges(n, 0);
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<node_id> ids;
            ids.reserve(local.neighbors(static_cast<node_id>(j)).size());
            for (node_id v : local.neighbors(static_cast<node_id>(j))) ids.push_back(members[v]);
            g.set_neighbors(members[j], std::move(ids));
            bridges[members[j]] = local.bridges(static_cast<node_id>(j));
        }
        g.set_bridge_counts(std::move(bridges));
        if (fp.keep_candidates) {
            auto& cands = rep.layers[layer].candidates;
            rep.layer0_candidates.assign(n, {});
            for (std::size_t j = 0; j < m; ++j) {
                auto& out = rep.layer0_candidates[members[j]];
                for (const auto& e : cands[j]) out.emplace_back(members[e.id], e.dist, e.fresh);
            }
            cands.clear();
        }
    }
    rep.seconds = seconds_since(t0);
    if (report) *report = std::move(rep);
    return lg;
}

}  // namespace proxgraph
