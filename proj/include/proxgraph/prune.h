#pragma once

#include <cstdint>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/distance.h"
#include "proxgraph/neighbor.h"

namespace proxgraph {

enum class PruneStrategy { rng, alpha };

/// Edge-selection parameters. alpha is in degrees, [60, 180); it is ignored by
/// the rng strategy, which behaves as alpha = 60.
struct PruneParams {
    std::size_t max_degree = 32;
    double alpha_degrees = 60.0;
    PruneStrategy strategy = PruneStrategy::rng;

    static PruneParams rng(std::size_t m) { return {m, 60.0, PruneStrategy::rng}; }
    static PruneParams alpha(std::size_t m, double degrees) { return {m, degrees, PruneStrategy::alpha}; }

    void validate() const;
};

/// Precomputed form of PruneParams used by the inner loop.
class DominanceTest {
 public:
    explicit DominanceTest(const PruneParams& p);

    /// Does kept neighbor w dominate candidate v? `uw`, `uv` are the squared
    /// distances from the owner u; `wv` is evaluated lazily via `dist_wv`.
    template <typename DistFn>
    bool operator()(float uw, float uv, DistFn&& dist_wv, OpCounters& c) const {
        if (!(uw < uv)) return false;
        ++c.distance;
        const float wv = dist_wv();
        if (!(wv < uv)) return false;
        if (!use_angle_) return true;
        // Coincident points make the apex angle undefined; treat as dominated.
        if (wv == 0.0f || uw == 0.0f) return true;
        ++c.angle;
        return cos_angle_from_squared(uw, wv, uv) < cos_alpha_;
    }

    std::size_t max_degree() const { return max_degree_; }

 private:
    std::size_t max_degree_;
    bool use_angle_;
    double cos_alpha_;
};

/// Greedy RNG pruning of candidates `cands` (ascending (dist, id), self-free,
/// no duplicate ids) of node u. Keeps v unless an already-kept w has
/// dist(u,w) < dist(u,v) and dist(v,w) < dist(u,v); stops at M kept.
NeighborList rng_prune(const Dataset& ds, const NeighborList& cands, std::size_t max_degree,
                       OpCounters* counters = nullptr);

/// Greedy alpha-pruning: as rng_prune, but w must also see u and v under an
/// angle larger than alpha (cos(angle at w) < cos(alpha)).
NeighborList alpha_prune(const Dataset& ds, const NeighborList& cands, std::size_t max_degree,
                         double alpha_degrees, OpCounters* counters = nullptr);

NeighborList prune(const Dataset& ds, const NeighborList& cands, const PruneParams& params,
                   OpCounters* counters = nullptr);

/// What one greedy pruning pass learned about its candidates. Entries are
/// sorted by id. A kept entry stores its kept position; a pruned entry stores
/// the kept position of the neighbor that dominated it, and `clean` says every
/// kept neighbor before that one is known not to dominate it. Candidates never
/// reached (the pass stopped at M) are absent.
struct PruneRecord {
    struct Entry {
        node_id id;
        std::int32_t kept_pos;   // >= 0 when kept
        std::int32_t pruner_pos; // >= 0 when pruned
        bool clean;
    };
    std::vector<node_id> kept;
    std::vector<Entry> entries;

    const Entry* find(node_id id) const;
};

/// Pruning that reuses pair verdicts from the previous pass over the same
/// owner (`prev`, may be null) and writes this pass's record to `next`.
/// Returns exactly what prune() returns for the same input.
NeighborList prune_with_record(const Dataset& ds, const NeighborList& cands, const PruneParams& params,
                               const PruneRecord* prev, PruneRecord& next, OpCounters* counters = nullptr);

}  // namespace proxgraph
