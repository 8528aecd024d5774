#pragma once

#include <cstdint>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/graph.h"
#include "proxgraph/neighbor.h"
#include "proxgraph/prune.h"

namespace proxgraph {

struct RefineOptions {
    PruneParams prune;
    /// Run connectivity repair from `entry_point`.
    bool connect = true;
    node_id entry_point = 0;
    /// Beam width of the search that locates the bridge source.
    std::size_t connect_width = 64;
};

/// Verdict records of the previous refine over the same node set, one per node
/// and phase. Passing the same memo to consecutive refine() calls lets the
/// pruning passes skip pair tests whose outcome is already known.
struct RefineMemo {
    std::vector<PruneRecord> forward;
    std::vector<PruneRecord> reverse;
    bool primed = false;
};

struct RefineStats {
    OpCounters prune;        // kernel calls in the two pruning phases
    OpCounters connect;      // kernel calls of bridge searches
    std::size_t bridges = 0; // edges appended by connectivity repair
};

/// Phase A: N(u) = prune(C(u)). Phase B: N(u) = prune(N(u) ∪ {v : u ∈ N(v)}).
/// Phase C (connect): while some node is unreachable from the entry point,
/// take the lowest such id v, beam-search its vector from the entry point and
/// append an edge from the closest node found to v.
///
/// Every candidate list must be ascending, self-free and duplicate-free.
/// Phases A and B run in parallel over nodes; the result does not depend on
/// the thread count.
ProximityGraph refine(const std::vector<NeighborList>& candidates, const Dataset& ds,
                      const RefineOptions& options, RefineStats* stats = nullptr,
                      RefineMemo* memo = nullptr);

/// Same as refine() but also returns the per-node lists after phase B with
/// their distances.
ProximityGraph refine_with_lists(const std::vector<NeighborList>& candidates, const Dataset& ds,
                                 const RefineOptions& options, std::vector<NeighborList>& lists,
                                 RefineStats* stats = nullptr, RefineMemo* memo = nullptr);

/// Connectivity repair on its own (phase C). Returns the number of bridges.
std::size_t connect_from(ProximityGraph& g, const Dataset& ds, node_id entry_point, std::size_t width,
                         OpCounters* counters = nullptr);

/// Approximate medoid: top-1 of a beam search for the dataset centroid,
/// started from a node drawn with `seed`.
node_id entry_point(const Dataset& ds, const ProximityGraph& g, std::size_t k, std::size_t L,
                    std::uint64_t seed, OpCounters* counters = nullptr);

}  // namespace proxgraph
