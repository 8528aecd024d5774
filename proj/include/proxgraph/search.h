#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "proxgraph/candidate_pool.h"
#include "proxgraph/dataset.h"
#include "proxgraph/distance.h"
#include "proxgraph/graph.h"

namespace proxgraph {

/// Generation-stamped visited set; reset is O(1) amortized.
class VisitedSet {
 public:
    void prepare(std::size_t n) {
        if (stamp_.size() != n) {
            stamp_.assign(n, 0);
            gen_ = 0;
        }
        if (++gen_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            gen_ = 1;
        }
    }
    /// Marks `id`; returns false if it was already marked in this generation.
    bool insert(node_id id) {
        if (stamp_[id] == gen_) return false;
        stamp_[id] = gen_;
        return true;
    }
    bool contains(node_id id) const { return stamp_[id] == gen_; }

 private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t gen_ = 0;
};

/// Per-thread reusable search buffers.
struct SearchScratch {
    CandidatePool pool{1};
    VisitedSet visited;
    std::vector<node_id> expanded;

    void prepare(std::size_t n, std::size_t width) {
        pool.reset(width);
        visited.prepare(n);
        expanded.clear();
    }
};

/// Beam search: seed the pool with `ep`, repeatedly expand the first
/// unexpanded entry, offering its out-neighbors, until every entry of the
/// (at most L) pool is expanded. Returns the first k entries.
///
/// The cursor jumps back to the lowest slot filled during an expansion and
/// otherwise moves forward past expanded entries, which is the same as always
/// picking the first unexpanded entry. Ids already offered are not offered
/// again. Throws ArgumentError if k > L, k == 0, the graph is empty, or ep is
/// out of range.
NeighborList kann_search(const ProximityGraph& g, const Dataset& ds, std::span<const float> q,
                         std::size_t k, std::size_t L, node_id ep, SearchScratch* scratch = nullptr,
                         OpCounters* counters = nullptr);

struct SearchTrace {
    NeighborList results;
    std::uint64_t dist_count = 0;
    /// Largest exact rank (1-based) among expanded nodes; 0 without a rank table.
    std::uint32_t max_rank_on_path = 0;
    std::vector<node_id> expansion_order;
};

/// kann_search plus observation: distance-kernel calls, expansion order and,
/// given `ranks` (see exact_ranks), the maximum rank among expanded nodes.
SearchTrace kann_search_instrumented(const ProximityGraph& g, const Dataset& ds, std::span<const float> q,
                                     std::size_t k, std::size_t L, node_id ep,
                                     std::span<const std::uint32_t> ranks = {});

/// Candidate acquisition for dataset row `self`: beam search for its own
/// vector, dropping `self` from the answer. The pool holds max(L, k+1) entries
/// so the answer still has k ids whenever k ids are reachable.
NeighborList search_excluding_self(const ProximityGraph& g, const Dataset& ds, node_id self, std::size_t k,
                                   std::size_t L, node_id ep, SearchScratch& scratch,
                                   OpCounters* counters = nullptr);

/// Greedy 1-NN descent from the top layer's entry point down to layer 1, then
/// beam search of width L on layer 0 from the node reached.
NeighborList layered_search(const LayeredGraph& lg, const Dataset& ds, std::span<const float> q,
                            std::size_t k, std::size_t L, SearchScratch* scratch = nullptr,
                            OpCounters* counters = nullptr);

/// The node layered_search reaches before its layer-0 beam search.
node_id layered_descent(const LayeredGraph& lg, const Dataset& ds, std::span<const float> q,
                        std::size_t stop_layer, SearchScratch& scratch, OpCounters* counters = nullptr);

namespace detail {

/// Search loop shared by every beam-search flavour. `policy` supplies
/// `float distance(node_id from, std::size_t edge, node_id v)` (from is
/// kInvalidId for the entry point) and `void on_expand(node_id u)`, and may
/// supply `void prefetch(node_id v)`.
template <typename Policy>
void run_beam(const ProximityGraph& g, std::size_t width, node_id ep, SearchScratch& s, Policy& policy) {
    s.prepare(g.size(), width);
    s.visited.insert(ep);
    s.pool.insert_new(Neighbor(ep, policy.distance(kInvalidId, 0, ep)));
    std::size_t cur = 0;
    while (cur < s.pool.size()) {
        const node_id u = s.pool[cur].id;
        s.pool.mark_expanded(cur);
        policy.on_expand(u);
        std::size_t lowest = CandidatePool::kRejected;
        const auto nbrs = g.neighbors(u);
        if constexpr (requires { policy.prefetch(u); }) {
            for (node_id v : nbrs) {
                if (!s.visited.contains(v)) policy.prefetch(v);
            }
        }
        for (std::size_t j = 0; j < nbrs.size(); ++j) {
            const node_id v = nbrs[j];
            if (!s.visited.insert(v)) continue;
            const float d = policy.distance(u, j, v);
            const std::size_t pos = s.pool.insert_new(Neighbor(v, d));
            if (pos < lowest) lowest = pos;
        }
        cur = s.pool.next_unexpanded(std::min(lowest, cur + 1));
    }
}

}  // namespace detail

}  // namespace proxgraph
