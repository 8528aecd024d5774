#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "proxgraph/common.h"

namespace proxgraph {

/// Directed graph over ids [0, n) with out-degree cap M and an entry point.
///
/// Edges appended by connectivity repair may push a node past M; those nodes
/// carry a nonzero bridge count and the cap becomes M + bridges(u).
class ProximityGraph {
 public:
    ProximityGraph() = default;
    ProximityGraph(std::size_t n, std::size_t max_degree);

    std::size_t size() const { return adj_.size(); }
    std::size_t max_degree() const { return max_degree_; }

    node_id entry_point() const { return entry_; }
    void set_entry_point(node_id ep);

    std::span<const node_id> neighbors(node_id u) const { return adj_[u]; }
    std::vector<node_id>& mutable_neighbors(node_id u) { return adj_[u]; }
    void set_neighbors(node_id u, std::vector<node_id> ids) { adj_[u] = std::move(ids); }

    /// Appends a connectivity edge, possibly exceeding the degree cap.
    void add_bridge(node_id from, node_id to);
    std::uint32_t bridges(node_id u) const { return bridges_.empty() ? 0 : bridges_[u]; }
    std::span<const std::uint32_t> bridge_counts() const { return bridges_; }
    void set_bridge_counts(std::vector<std::uint32_t> counts);

    std::size_t edge_count() const;
    double mean_degree() const;

    /// Nodes reachable from `root` over out-edges (iterative DFS).
    std::vector<bool> reachable_from(node_id root) const;

    bool operator==(const ProximityGraph& o) const = default;

 private:
    std::size_t max_degree_ = 0;
    node_id entry_ = 0;
    std::vector<std::vector<node_id>> adj_;
    std::vector<std::uint32_t> bridges_;
};

/// Stack of graphs sharing one id space. Layer i holds the nodes with
/// level >= i; non-members have empty adjacency in that layer.
class LayeredGraph {
 public:
    LayeredGraph() = default;
    LayeredGraph(std::vector<std::uint32_t> levels, std::size_t max_degree);

    std::size_t size() const { return levels_.size(); }
    std::size_t num_layers() const { return layers_.size(); }
    std::size_t top_layer() const { return layers_.size() - 1; }

    std::uint32_t level(node_id u) const { return levels_[u]; }
    std::span<const std::uint32_t> levels() const { return levels_; }
    bool in_layer(node_id u, std::size_t layer) const { return levels_[u] >= layer; }
    std::vector<node_id> layer_members(std::size_t layer) const;

    const ProximityGraph& layer(std::size_t i) const { return layers_[i]; }
    ProximityGraph& layer(std::size_t i) { return layers_[i]; }

    node_id entry_point() const { return entry_; }
    void set_entry_point(node_id ep) { entry_ = ep; }

    bool operator==(const LayeredGraph& o) const = default;

 private:
    std::vector<std::uint32_t> levels_;
    std::vector<ProximityGraph> layers_;
    node_id entry_ = 0;
};

}  // namespace proxgraph
