#include "proxgraph/oracle.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "proxgraph/distance.h"

namespace proxgraph {

NeighborList exact_knn(const Dataset& ds, std::span<const float> q, std::size_t k, node_id exclude) {
    const std::size_t eligible = ds.size() - (exclude < ds.size() ? 1 : 0);
    PROXGRAPH_REQUIRE_ARG(k >= 1 && k <= eligible,
                          "k=" + std::to_string(k) + " outside [1, " + std::to_string(eligible) + "]");
    PROXGRAPH_REQUIRE_ARG(q.size() == ds.dim(), "query dimensionality mismatch");
    NeighborList all;
    all.reserve(eligible);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto id = static_cast<node_id>(i);
        if (id == exclude) continue;
        all.emplace_back(id, squared_l2(q, ds.row(id)));
    }
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), closer);
    all.resize(k);
    return all;
}

IdTable ground_truth_table(const Dataset& ds, const Dataset& queries, std::size_t k, bool exclude_self) {
    PROXGRAPH_REQUIRE_ARG(queries.dim() == ds.dim(), "query dimensionality mismatch");
    if (exclude_self) PROXGRAPH_REQUIRE_ARG(queries.size() <= ds.size(), "more queries than rows");
    const std::size_t eligible = ds.size() - (exclude_self ? 1 : 0);
    PROXGRAPH_REQUIRE_ARG(k >= 1 && k <= eligible, "k=" + std::to_string(k) + " out of range");
    IdTable table;
    table.rows = queries.size();
    table.cols = k;
    table.values.resize(table.rows * k);
    const auto nq = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < nq; ++i) {
        const auto qid = static_cast<node_id>(i);
        const auto nn = exact_knn(ds, queries.row(qid), k, exclude_self ? qid : kInvalidId);
        for (std::size_t j = 0; j < k; ++j) {
            table.values[static_cast<std::size_t>(i) * k + j] = static_cast<std::int32_t>(nn[j].id);
        }
    }
    return table;
}

std::vector<NeighborList> exact_knn_all(const Dataset& ds, std::size_t k) {
    std::vector<NeighborList> out(ds.size());
    const auto n = static_cast<std::int64_t>(ds.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<node_id>(i);
        out[u] = exact_knn(ds, ds.row(u), k, u);
    }
    return out;
}

namespace {

template <typename T>
double recall_impl(std::span<const node_id> returned, std::span<const T> truth, std::size_t k) {
    PROXGRAPH_REQUIRE_ARG(truth.size() == k && k > 0,
                          "truth has " + std::to_string(truth.size()) + " ids, expected k=" + std::to_string(k));
    std::unordered_set<std::int64_t> want(truth.begin(), truth.end());
    std::unordered_set<std::int64_t> seen;
    std::size_t hit = 0;
    for (node_id id : returned) {
        if (want.count(id) && seen.insert(id).second) ++hit;
    }
    return static_cast<double>(hit) / static_cast<double>(k);
}

}  // namespace

double recall_at_k(std::span<const node_id> returned, std::span<const node_id> truth, std::size_t k) {
    return recall_impl(returned, truth, k);
}

double recall_at_k(std::span<const node_id> returned, std::span<const std::int32_t> truth, std::size_t k) {
    return recall_impl(returned, truth, k);
}

std::vector<std::uint32_t> exact_ranks(const Dataset& ds, std::span<const float> q) {
    NeighborList all;
    all.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        all.emplace_back(static_cast<node_id>(i), squared_l2(q, ds.row(static_cast<node_id>(i))));
    }
    sort_neighbors(all);
    std::vector<std::uint32_t> rank(ds.size());
    for (std::size_t r = 0; r < all.size(); ++r) rank[all[r].id] = static_cast<std::uint32_t>(r + 1);
    return rank;
}

}  // namespace proxgraph
