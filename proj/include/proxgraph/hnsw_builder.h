#pragma once

#include <cstdint>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/distance.h"
#include "proxgraph/graph.h"
#include "proxgraph/neighbor.h"
#include "proxgraph/nsg_builder.h"

namespace proxgraph {

struct LayerAssignment {
    std::vector<std::uint32_t> levels;
    std::uint32_t max_level = 0;
    double m_factor = 0.0;
};

/// l(u) = floor(-ln(U) * m_factor), U uniform on (0, 1], drawn in id order
/// from one seeded stream. Levels are capped at 63.
LayerAssignment assign_layers(std::size_t n, double m_factor, std::uint64_t seed);

/// 1 / ln(M), or 1 when M < 2.
double default_m_factor(std::size_t max_degree);

struct HnswParams {
    std::size_t ef = 64;
    std::size_t max_degree = 16;
    /// <= 0 selects default_m_factor(max_degree).
    double m_factor = 0.0;
    std::uint64_t seed = 1;
    /// Keep each node's layer-0 search result W_0 from insertion time.
    bool record_candidates = false;
};

struct HnswReport {
    double seconds = 0.0;
    OpCounters counters;
    /// W_0 per node when record_candidates is set (empty for the first node).
    std::vector<NeighborList> insertion_candidates;
};

/// Incremental insertion in id order: greedy descent above l(u), beam search
/// of width ef on each layer l(u)..0, RNG prune to M, reverse edges with
/// re-prune of any neighbor list that overflows M. No connectivity repair.
LayeredGraph build_hnsw_original(const Dataset& ds, const HnswParams& params, HnswReport* report = nullptr);

struct FastHnswParams {
    KnngParams knng;
    std::size_t ef = 64;
    std::size_t max_degree = 16;
    double alpha_degrees = 66.0;
    double m_factor = 0.0;
    std::size_t max_iters = 2;
    /// Connectivity repair inside each layer's self-iterative build.
    bool layer_connect = true;
    bool cached = true;
    std::uint64_t seed = 1;
    /// Keep the final layer-0 candidate lists (global ids).
    bool record_candidates = false;
};

struct FastHnswReport {
    double seconds = 0.0;
    std::vector<BuildReport> layers;  // index = layer; empty report for complete layers
    std::vector<NeighborList> layer0_candidates;
};

/// Layer-by-layer construction: layers assigned up front, entry point drawn
/// from the top layer; a layer with at most M members becomes a complete
/// digraph, any other is built by build_fastnsg over its members with k = L = ef.
LayeredGraph build_fasthnsw(const Dataset& ds, const FastHnswParams& params, FastHnswReport* report = nullptr);

}  // namespace proxgraph
