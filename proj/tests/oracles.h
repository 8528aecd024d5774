#pragma once

// Brute-force reference implementations used only by tests. They are written
// in double precision and in the most direct way possible, independent of the
// library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/distance.h"
#include "proxgraph/graph.h"
#include "proxgraph/neighbor.h"
#include "proxgraph/prune.h"
#include "proxgraph/search.h"
#include "proxgraph/synthetic.h"

namespace oracle {

using proxgraph::Dataset;
using proxgraph::node_id;

inline double dist2(const Dataset& ds, node_id a, node_id b) {
    double s = 0.0;
    for (std::size_t i = 0; i < ds.dim(); ++i) {
        const double t = double(ds.row(a)[i]) - double(ds.row(b)[i]);
        s += t * t;
    }
    return s;
}

inline double dist2(const Dataset& ds, std::span<const float> q, node_id b) {
    double s = 0.0;
    for (std::size_t i = 0; i < ds.dim(); ++i) {
        const double t = double(q[i]) - double(ds.row(b)[i]);
        s += t * t;
    }
    return s;
}

/// Ids sorted by (distance to q, id); `skip` excluded.
inline std::vector<node_id> brute_knn(const Dataset& ds, std::span<const float> q, std::size_t k,
                                      node_id skip = proxgraph::kInvalidId) {
    std::vector<std::pair<double, node_id>> all;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i == skip) continue;
        all.emplace_back(dist2(ds, q, static_cast<node_id>(i)), static_cast<node_id>(i));
    }
    std::sort(all.begin(), all.end());
    std::vector<node_id> out;
    for (std::size_t i = 0; i < std::min(k, all.size()); ++i) out.push_back(all[i].second);
    return out;
}

/// Candidate list for node u over `ids` with the library's float distances,
/// sorted by (dist, id).
inline proxgraph::NeighborList make_candidates(const Dataset& ds, node_id u, const std::vector<node_id>& ids) {
    proxgraph::NeighborList l;
    for (node_id v : ids) l.emplace_back(v, proxgraph::squared_l2(ds.row(u), ds.row(v)));
    proxgraph::sort_neighbors(l);
    return l;
}

/// Greedy dominance filter in O(|C|^2): walk candidates in order, keep v
/// unless some kept w satisfies d(u,w) < d(u,v), d(w,v) < d(u,v) and, for
/// alpha > 60, angle(u,w,v) > alpha. Distances are the ones stored in the
/// list for (u,·) and recomputed with `dist_fn` for (w,v).
template <typename DistFn>
std::vector<node_id> dominance_filter(const proxgraph::NeighborList& cands, std::size_t m, double alpha_deg,
                                      DistFn dist_fn) {
    std::vector<std::pair<node_id, float>> kept;
    const double pi = std::acos(-1.0);
    for (const auto& c : cands) {
        if (kept.size() >= m) break;
        bool dominated = false;
        for (const auto& [w, uw] : kept) {
            if (!(uw < c.dist)) continue;
            const float wv = dist_fn(w, c.id);
            if (!(wv < c.dist)) continue;
            if (alpha_deg <= 60.0) {
                dominated = true;
                break;
            }
            if (wv == 0.0f || uw == 0.0f) {
                dominated = true;
                break;
            }
            const double a = std::sqrt(double(uw)), b = std::sqrt(double(wv));
            double cosv = (double(uw) + double(wv) - double(c.dist)) / (2.0 * a * b);
            cosv = std::clamp(cosv, -1.0, 1.0);
            if (std::acos(cosv) > alpha_deg * pi / 180.0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.emplace_back(c.id, c.dist);
    }
    std::vector<node_id> out;
    for (const auto& kv : kept) out.push_back(kv.first);
    return out;
}

/// Ranks of all nodes for q, 1-based, ties by id.
inline std::vector<std::uint32_t> ranks(const Dataset& ds, std::span<const float> q) {
    const auto order = brute_knn(ds, q, ds.size());
    std::vector<std::uint32_t> r(ds.size());
    for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<std::uint32_t>(i + 1);
    return r;
}

/// min over paths from `src` to `dst` of the maximum rank on the path
/// (minimax path by Dijkstra on the bottleneck metric). Max uint32 when
/// unreachable.
inline std::uint32_t minimax_rank(const proxgraph::ProximityGraph& g, const std::vector<std::uint32_t>& rank,
                                  node_id src, node_id dst) {
    const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> best(g.size(), inf);
    using Item = std::pair<std::uint32_t, node_id>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    best[src] = rank[src];
    pq.emplace(best[src], src);
    while (!pq.empty()) {
        const auto [b, u] = pq.top();
        pq.pop();
        if (b != best[u]) continue;
        if (u == dst) return b;
        for (node_id v : g.neighbors(u)) {
            const std::uint32_t nb = std::max(b, rank[v]);
            if (nb < best[v]) {
                best[v] = nb;
                pq.emplace(nb, v);
            }
        }
    }
    return best[dst];
}

inline Dataset uniform(std::size_t n, std::size_t d, std::uint64_t seed) {
    proxgraph::SyntheticSpec s;
    s.n = n;
    s.d = d;
    s.seed = seed;
    return proxgraph::gen_synthetic(s);
}

/// Graph-wide invariant checks; returns an empty string when all hold.
inline std::string check_graph(const proxgraph::ProximityGraph& g, bool expect_connected) {
    for (std::size_t u = 0; u < g.size(); ++u) {
        const auto nb = g.neighbors(static_cast<node_id>(u));
        if (nb.size() > g.max_degree() + g.bridges(static_cast<node_id>(u))) return "degree cap at " + std::to_string(u);
        std::set<node_id> s(nb.begin(), nb.end());
        if (s.size() != nb.size()) return "duplicate edge at " + std::to_string(u);
        if (s.count(static_cast<node_id>(u))) return "self loop at " + std::to_string(u);
        for (node_id v : nb) {
            if (v >= g.size()) return "id out of range at " + std::to_string(u);
        }
    }
    if (expect_connected) {
        const auto r = g.reachable_from(g.entry_point());
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (!r[u]) return "unreachable " + std::to_string(u);
        }
    }
    return {};
}

inline double recall(const std::vector<node_id>& got, const std::vector<node_id>& truth) {
    std::size_t hit = 0;
    for (node_id v : got) hit += std::count(truth.begin(), truth.end(), v);
    return truth.empty() ? 1.0 : double(hit) / double(truth.size());
}

/// Exact kNN graph (self excluded), brute force.
inline proxgraph::ProximityGraph exact_knng(const Dataset& ds, std::size_t k) {
    proxgraph::ProximityGraph g(ds.size(), k);
    for (std::size_t u = 0; u < ds.size(); ++u) {
        g.set_neighbors(static_cast<node_id>(u),
                        brute_knn(ds, ds.row(static_cast<node_id>(u)), k, static_cast<node_id>(u)));
    }
    return g;
}

struct RankPathCount {
    std::size_t instances = 0;
    std::size_t premises = 0;
    std::size_t violations = 0;
};

/// k-CNA form of the rank-path implication. G is an exact kNN graph, G' its
/// alpha-pruned subgraph; the query is a node u and both beam searches start
/// at u. For every p among u's L nearest that the search on G returns and
/// whose minimax path rank from u is equal in G and G', check that the search
/// on G' returns p as well.
inline RankPathCount rank_path_check(std::size_t instances, std::size_t queries, double alpha, std::uint64_t seed) {
    RankPathCount out;
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    for (std::size_t inst = 0; inst < instances; ++inst) {
        const std::size_t n = 60 + rng() % 141;
        const std::size_t d = 2 + rng() % 7;
        const std::size_t k0 = 6 + rng() % 7;
        const auto ds = uniform(n, d, seed * 1000 + inst);
        const auto g = exact_knng(ds, k0);
        proxgraph::ProximityGraph pruned(n, k0);
        for (std::size_t u = 0; u < n; ++u) {
            const auto nb = g.neighbors(static_cast<node_id>(u));
            const auto cands = make_candidates(ds, static_cast<node_id>(u), {nb.begin(), nb.end()});
            pruned.set_neighbors(static_cast<node_id>(u), proxgraph::ids_of(proxgraph::alpha_prune(ds, cands, k0, alpha)));
        }
        ++out.instances;
        for (std::size_t qi = 0; qi < queries; ++qi) {
            const auto qn = static_cast<node_id>(rng() % n);
            const auto q = ds.row(qn);
            const auto rank = ranks(ds, q);
            const std::size_t L = 4 + rng() % 8;
            const auto s1 = proxgraph::ids_of(proxgraph::kann_search(g, ds, q, L, L, qn));
            const auto s2 = proxgraph::ids_of(proxgraph::kann_search(pruned, ds, q, L, L, qn));
            for (node_id p : brute_knn(ds, q, L)) {
                if (std::find(s1.begin(), s1.end(), p) == s1.end()) continue;
                if (minimax_rank(g, rank, qn, p) != minimax_rank(pruned, rank, qn, p)) continue;
                ++out.premises;
                out.violations += std::find(s2.begin(), s2.end(), p) == s2.end();
            }
        }
    }
    return out;
}

}  // namespace oracle
