#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/index_io.h"
#include "proxgraph/vecs_io.h"

namespace proxgraph {

struct SweepRow {
    std::size_t L = 0;
    double recall = 0.0;
    double qps = 0.0;
    double mean_distances = 0.0;
    double seconds = 0.0;
};

/// Sorts and deduplicates L values; one warning per removed duplicate.
/// Throws ArgumentError if any L < k.
std::vector<std::size_t> normalize_l_values(std::vector<std::size_t> ls, std::size_t k,
                                            std::vector<std::string>* warnings = nullptr);

/// Runs every query single-threaded at each L (ascending) and reports mean
/// recall@k against `truth` and queries per second. Flat indexes are searched
/// from their entry point; layered ones with layered_search.
std::vector<SweepRow> search_sweep(const AnyGraph& index, const Dataset& ds, const Dataset& queries,
                                   const IdTable& truth, std::size_t k, const std::vector<std::size_t>& ls,
                                   std::vector<std::string>* warnings = nullptr);

/// Pruning frequency in the plane: triangles (u, w, v) with the angle at w fixed to
/// alpha and dist(u,w), dist(v,w) < dist(u,v); for a query at infinity in a
/// uniform direction, how often is w farther than both u and v.
struct PruningFrequencyResult {
    double alpha_degrees = 0.0;
    std::size_t trials = 0;
    double frequency = 0.0;
    double expected = 0.0;     // (pi - alpha) / (2 pi)
    double std_error = 0.0;
    /// Prunings per rank increase, 1 / frequency, against 2 pi / (pi - alpha).
    double prunings_per_rank_increase = 0.0;
    double prunings_expected = 0.0;
};
PruningFrequencyResult montecarlo_pruning_frequency(double alpha_degrees, std::size_t trials, std::uint64_t seed);

/// Angle at the dominating neighbor over successful RNG prunings: uniform
/// [0,1]^d data, exact k-NN candidate lists of `samples` random nodes, RNG
/// pruning without degree cap; each pruned v contributes angle(u, w, v) for
/// its first dominating kept w.
struct PruningAngleResult {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::size_t candidates = 0;
    std::size_t samples = 0;
    std::size_t prunings = 0;
    double mean_degrees = 0.0;
    double std_degrees = 0.0;
    double ci95_degrees = 0.0;
    std::vector<std::size_t> histogram;  // 10-degree bins over [0, 180)
};
PruningAngleResult montecarlo_pruning_angle(std::size_t n, std::size_t dim, std::size_t candidates,
                                            std::size_t samples, std::uint64_t seed);

/// Coverage of the sampling bound: candidate lists from a short NN-Descent
/// run on uniform data, the exact mean recall r over all nodes, then `trials`
/// independently seeded estimates; reports how many fall within eps/2 of r.
struct SamplingBoundResult {
    std::size_t n = 0;
    std::size_t n_s = 0;
    std::size_t trials = 0;
    double epsilon = 0.0;
    double l = 0.0;
    double true_recall = 0.0;
    double coverage = 0.0;
    double required = 0.0;  // 1 - n^-l
    double max_error = 0.0;
    double mean_abs_error = 0.0;
};
SamplingBoundResult montecarlo_sampling_bound(std::size_t n, std::size_t dim, std::size_t k, double epsilon,
                                              double l, std::size_t trials, std::uint64_t seed,
                                              std::size_t knng_iters = 1);

/// Host, compiler and thread details for reports.
std::string environment_stamp();

}  // namespace proxgraph
