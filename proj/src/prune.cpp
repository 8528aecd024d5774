#include "proxgraph/prune.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace proxgraph {

void PruneParams::validate() const {
    PROXGRAPH_REQUIRE_ARG(max_degree >= 1, "max degree M must be positive");
    if (strategy == PruneStrategy::alpha) {
        PROXGRAPH_REQUIRE_ARG(alpha_degrees >= 60.0 && alpha_degrees < 180.0,
                              "alpha must lie in [60, 180) degrees");
    }
}

DominanceTest::DominanceTest(const PruneParams& p)
        : max_degree_(p.max_degree),
          use_angle_(p.strategy == PruneStrategy::alpha),
          cos_alpha_(std::cos(p.alpha_degrees * std::numbers::pi / 180.0)) {}

namespace {

NeighborList greedy_prune(const Dataset& ds, const NeighborList& cands, const DominanceTest& dominates,
                          OpCounters& c) {
    NeighborList kept;
    const std::size_t m = dominates.max_degree();
    kept.reserve(std::min(m, cands.size()));
    for (const auto& v : cands) {
        if (kept.size() >= m) break;
        const auto vrow = ds.row(v.id);
        bool pruned = false;
        for (const auto& w : kept) {
            if (dominates(w.dist, v.dist, [&] { return squared_l2(ds.row(w.id), vrow); }, c)) {
                pruned = true;
                break;
            }
        }
        if (!pruned) kept.push_back(v);
    }
    return kept;
}

}  // namespace

NeighborList prune(const Dataset& ds, const NeighborList& cands, const PruneParams& params,
                   OpCounters* counters) {
    params.validate();
    OpCounters local;
    auto out = greedy_prune(ds, cands, DominanceTest(params), local);
    if (counters) *counters += local;
    return out;
}

NeighborList rng_prune(const Dataset& ds, const NeighborList& cands, std::size_t max_degree,
                       OpCounters* counters) {
    return prune(ds, cands, PruneParams::rng(max_degree), counters);
}

NeighborList alpha_prune(const Dataset& ds, const NeighborList& cands, std::size_t max_degree,
                         double alpha_degrees, OpCounters* counters) {
    return prune(ds, cands, PruneParams::alpha(max_degree, alpha_degrees), counters);
}

const PruneRecord::Entry* PruneRecord::find(node_id id) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), id,
                               [](const Entry& e, node_id x) { return e.id < x; });
    return (it != entries.end() && it->id == id) ? &*it : nullptr;
}

NeighborList prune_with_record(const Dataset& ds, const NeighborList& cands, const PruneParams& params,
                               const PruneRecord* prev, PruneRecord& next, OpCounters* counters) {
    params.validate();
    const DominanceTest dominates(params);
    const std::size_t m = params.max_degree;
    OpCounters c;

    NeighborList kept;
    // Position of each kept neighbor in the previous pass's kept list, or -1.
    std::vector<std::int32_t> prev_pos;
    // fresh_before[i]: number of kept[0..i) that were not kept previously.
    std::vector<std::int32_t> fresh_before{0};
    next.kept.clear();
    next.entries.clear();

    for (const auto& v : cands) {
        if (kept.size() >= m) break;
        const PruneRecord::Entry* rec = prev ? prev->find(v.id) : nullptr;

        bool pruned = false;
        std::int32_t pruner = -1;
        bool clean = true;

        // Old kept neighbors with prev_pos below `known_below` are recorded as
        // non-dominating for v; all others must be tested.
        std::int32_t known_below = 0;
        if (rec && rec->kept_pos >= 0) {
            known_below = rec->kept_pos;
        } else if (rec && rec->pruner_pos >= 0) {
            const node_id p = prev->kept[static_cast<std::size_t>(rec->pruner_pos)];
            for (std::size_t i = 0; i < kept.size(); ++i) {
                if (kept[i].id == p) {
                    pruned = true;
                    pruner = static_cast<std::int32_t>(i);
                    clean = rec->clean && fresh_before[i] == 0;
                    break;
                }
            }
            if (!pruned && rec->clean) known_below = rec->pruner_pos;
        }

        if (!pruned) {
            const auto vrow = ds.row(v.id);
            for (std::size_t i = 0; i < kept.size(); ++i) {
                if (prev_pos[i] >= 0 && prev_pos[i] < known_below) continue;
                const auto& w = kept[i];
                if (dominates(w.dist, v.dist, [&] { return squared_l2(ds.row(w.id), vrow); }, c)) {
                    pruned = true;
                    pruner = static_cast<std::int32_t>(i);
                    break;
                }
            }
        }

        if (pruned) {
            next.entries.push_back({v.id, -1, pruner, clean});
        } else {
            next.entries.push_back({v.id, static_cast<std::int32_t>(kept.size()), -1, true});
            std::int32_t pp = -1;
            if (rec && rec->kept_pos >= 0) pp = rec->kept_pos;
            prev_pos.push_back(pp);
            fresh_before.push_back(fresh_before.back() + (pp < 0 ? 1 : 0));
            kept.push_back(v);
        }
    }
    for (const auto& k : kept) next.kept.push_back(k.id);
    std::sort(next.entries.begin(), next.entries.end(),
              [](const PruneRecord::Entry& a, const PruneRecord::Entry& b) { return a.id < b.id; });
    if (counters) *counters += c;
    return kept;
}

}  // namespace proxgraph
