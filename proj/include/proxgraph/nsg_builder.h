#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/distance.h"
#include "proxgraph/graph.h"
#include "proxgraph/knng.h"
#include "proxgraph/neighbor.h"
#include "proxgraph/refine.h"

namespace proxgraph {

/// Search-side distances remembered from a node's previous candidate search.
struct SeenEntry {
    node_id id;
    float dist;
};
using SeenList = std::vector<SeenEntry>;

/// Candidate lists C(u) across OptKCNA rounds.
struct CnaState {
    /// C(u), ascending, self-free. `fresh` is set on entries absent from the
    /// previous round's C(u).
    std::vector<NeighborList> lists;
    /// X_i(u): nodes expanded by u's latest candidate search, in order.
    std::vector<std::vector<node_id>> expanded;
    std::size_t iteration = 0;
    /// Root used for connectivity repair of every intermediate graph.
    node_id entry_point = 0;

    /// Reuse state for opt_kcna_cached; empty until its first call.
    RefineMemo memo;
    std::vector<SeenList> seen;
};

struct CnaParams {
    std::size_t k = 20;
    std::size_t L = 40;
    std::size_t max_degree = 20;
    double alpha_degrees = 66.0;
    bool connect = true;
    std::size_t connect_width = 64;

    void validate() const;
};

struct IterationStats {
    std::size_t iteration = 0;
    OpCounters refine;
    OpCounters connect;
    OpCounters search;
    std::size_t bridges = 0;
    double mean_degree = 0.0;
    double seconds = 0.0;
    /// Quality estimate taken after this round, when one was requested.
    std::optional<double> r_hat;

    std::uint64_t distance_total() const { return refine.distance + connect.distance + search.distance; }
};

/// Builds the initial state from a KNNG: C(u) = N_{G_k0}(u), all entries
/// fresh, entry point from a centroid search on the KNNG.
CnaState cna_from_knng(const Dataset& ds, KnngState knng, std::size_t k, std::size_t L, std::uint64_t seed,
                       OpCounters* counters = nullptr);

/// One OptKCNA round: Ĝ = refine(C, alpha-pruning, connect), then
/// C(u) = beam search for u on Ĝ started at u, u itself removed.
/// `graph_out` receives Ĝ when non-null.
CnaState opt_kcna(const CnaState& state, const Dataset& ds, const CnaParams& params,
                  IterationStats* stats = nullptr, ProximityGraph* graph_out = nullptr);

/// opt_kcna with cross-round reuse: pruning verdicts recorded in the previous
/// round's memo, and search distances remembered from u's previous search.
/// Output lists and Ĝ are identical to opt_kcna's.
CnaState opt_kcna_cached(CnaState state, const Dataset& ds, const CnaParams& params,
                         IterationStats* stats = nullptr, ProximityGraph* graph_out = nullptr);

struct QualityEstimate {
    double r_hat = 0.0;
    std::size_t n_s = 0;
    double epsilon = 0.0;
    double l = 0.0;
    /// n_s reached the bound (false only when capped at n below it).
    bool guaranteed = false;
    std::vector<node_id> samples;
};

/// ceil((8 + 2 eps) * l * ln(n) / eps^2). With `log2` the logarithm is base 2.
std::size_t sample_size(std::size_t n, double epsilon, double l, bool log2 = false);

/// n_s distinct node ids drawn uniformly from [0, n), ascending.
std::vector<node_id> sample_nodes(std::size_t n, std::size_t n_s, std::uint64_t seed);

/// Mean recall@k of C(u) against exact kNN over n_s uniformly drawn nodes.
QualityEstimate estimate_quality(const CnaState& state, const Dataset& ds, double epsilon, double l,
                                 std::size_t k, std::uint64_t seed, bool log2 = false);

/// Exact mean recall@k of C(u) over all nodes, given precomputed exact kNN.
double cna_recall(const std::vector<NeighborList>& lists, const std::vector<NeighborList>& exact, std::size_t k);

struct NsgParams {
    KnngParams knng;
    std::size_t k = 20;
    std::size_t L = 40;
    std::size_t max_degree = 20;
    std::size_t connect_width = 64;
    std::uint64_t seed = 1;
};

struct FastNsgParams {
    KnngParams knng;
    std::size_t k = 20;
    std::size_t L = 40;
    std::size_t max_degree = 20;
    double alpha_degrees = 66.0;
    /// Round budget I; with a target it caps the loop.
    std::size_t max_iters = 2;
    /// Stop once r_hat >= target. Unset: run exactly max_iters rounds.
    std::optional<double> target_recall;
    double epsilon = 0.6;
    double l = 1.0;
    bool log2_samples = false;
    /// Estimate round i while round i+1 runs; decide on the latest finished estimate.
    bool async_quality = false;
    bool cached = true;
    bool connect = true;
    std::size_t connect_width = 64;
    std::uint64_t seed = 1;
    /// Copy the final C(u) lists into BuildReport::candidates.
    bool keep_candidates = false;
};

struct BuildReport {
    double knng_seconds = 0.0;
    double search_seconds = 0.0;
    double refine_seconds = 0.0;
    double total_seconds = 0.0;
    OpCounters knng;
    OpCounters search;
    RefineStats refine;
    std::vector<IterationStats> iterations;
    node_id entry_point = 0;
    std::vector<NeighborList> candidates;
};

/// NSG: KNNG, centroid entry point, C(u) by beam search on the KNNG from the
/// entry point, then RNG refine with connectivity repair.
ProximityGraph build_nsg_original(const Dataset& ds, const NsgParams& params, BuildReport* report = nullptr);

/// Self-iterative NSG: KNNG, OptKCNA rounds until the stop rule, then RNG
/// refine with connectivity repair from the entry point.
ProximityGraph build_fastnsg(const Dataset& ds, const FastNsgParams& params, BuildReport* report = nullptr);

}  // namespace proxgraph
