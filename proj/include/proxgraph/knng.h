#pragma once

#include <cstdint>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/distance.h"
#include "proxgraph/neighbor.h"

namespace proxgraph {

struct KnngParams {
    std::size_t k0 = 20;
    std::size_t iters = 8;
    /// Fraction of new entries sampled into each local join (0, 1].
    double sample_rate = 1.0;
    std::uint64_t seed = 1;
    /// Stop once an iteration updates fewer than this fraction of n*k0 slots.
    double early_stop = 0.001;
};

/// NN-Descent state: one fixed-size ascending list per node whose `fresh`
/// bits mark entries not yet used in a local join.
struct KnngState {
    std::vector<NeighborList> lists;
    std::size_t k0 = 0;
    std::size_t iteration = 0;
    double sample_rate = 1.0;
    std::uint64_t seed = 1;
    OpCounters counters;
};

/// Every node gets k0 distinct random non-self neighbors. Throws
/// ArgumentError when k0 >= n or k0 == 0.
KnngState knng_init_random(const Dataset& ds, std::size_t k0, std::uint64_t seed);

/// One NN-Descent round: local joins over sampled new/old forward and reverse
/// neighbors; a proposal replaces a list's worst entry only if it precedes it
/// in (dist, id) order. Returns the number of list entries not present at the
/// start of the round. The result does not depend on the thread count.
std::size_t knng_descent_iterate(KnngState& state, const Dataset& ds);

/// knng_init_random followed by up to `iters` rounds.
KnngState build_knng(const Dataset& ds, const KnngParams& params);

}  // namespace proxgraph
