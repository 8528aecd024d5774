#pragma once

#include <span>
#include <vector>

#include "proxgraph/dataset.h"
#include "proxgraph/neighbor.h"
#include "proxgraph/vecs_io.h"

namespace proxgraph {

/// Brute-force k nearest rows of `q`, ascending by (dist, id). Row `exclude`
/// (a query that is itself a dataset row) is skipped. Throws ArgumentError
/// when k is zero or exceeds the number of eligible rows.
NeighborList exact_knn(const Dataset& ds, std::span<const float> q, std::size_t k,
                       node_id exclude = kInvalidId);

/// Row i holds the ids of exact_knn(ds, queries[i], k). With `exclude_self`
/// the queries are taken to be dataset rows 0..nq-1 and row i skips id i.
/// Parallel over queries; output does not depend on the thread count.
IdTable ground_truth_table(const Dataset& ds, const Dataset& queries, std::size_t k,
                           bool exclude_self = false);

/// Self-excluded exact kNN lists for every row of `ds`.
std::vector<NeighborList> exact_knn_all(const Dataset& ds, std::size_t k);

/// |returned ∩ truth| / k. Throws ArgumentError unless truth.size() == k.
double recall_at_k(std::span<const node_id> returned, std::span<const node_id> truth, std::size_t k);
double recall_at_k(std::span<const node_id> returned, std::span<const std::int32_t> truth, std::size_t k);

/// 1-based rank of every id in the exact (dist, id) order around q.
std::vector<std::uint32_t> exact_ranks(const Dataset& ds, std::span<const float> q);

}  // namespace proxgraph
