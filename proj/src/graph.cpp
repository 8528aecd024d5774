#include "proxgraph/graph.h"

#include <algorithm>

namespace proxgraph {

ProximityGraph::ProximityGraph(std::size_t n, std::size_t max_degree)
        : max_degree_(max_degree), adj_(n) {}

void ProximityGraph::set_entry_point(node_id ep) {
    PROXGRAPH_EXPECT(ep < adj_.size(), "entry point out of range");
    entry_ = ep;
}

void ProximityGraph::add_bridge(node_id from, node_id to) {
    if (bridges_.empty()) bridges_.assign(adj_.size(), 0);
    adj_[from].push_back(to);
    ++bridges_[from];
}

void ProximityGraph::set_bridge_counts(std::vector<std::uint32_t> counts) {
    PROXGRAPH_EXPECT(counts.empty() || counts.size() == adj_.size(), "bridge count size");
    bridges_ = std::move(counts);
    if (std::all_of(bridges_.begin(), bridges_.end(), [](auto c) { return c == 0; })) {
        bridges_.clear();
    }
}

std::size_t ProximityGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& l : adj_) e += l.size();
    return e;
}

double ProximityGraph::mean_degree() const {
    return adj_.empty() ? 0.0 : static_cast<double>(edge_count()) / static_cast<double>(adj_.size());
}

std::vector<bool> ProximityGraph::reachable_from(node_id root) const {
    std::vector<bool> seen(adj_.size(), false);
    if (adj_.empty()) return seen;
    std::vector<node_id> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        node_id u = stack.back();
        stack.pop_back();
        for (node_id v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

LayeredGraph::LayeredGraph(std::vector<std::uint32_t> levels, std::size_t max_degree)
        : levels_(std::move(levels)) {
    PROXGRAPH_EXPECT(!levels_.empty(), "empty layered graph");
    const auto top = *std::max_element(levels_.begin(), levels_.end());
    layers_.assign(top + 1, ProximityGraph(levels_.size(), max_degree));
}

std::vector<node_id> LayeredGraph::layer_members(std::size_t layer) const {
    std::vector<node_id> out;
    for (std::size_t u = 0; u < levels_.size(); ++u) {
        if (levels_[u] >= layer) out.push_back(static_cast<node_id>(u));
    }
    return out;
}

}  // namespace proxgraph
