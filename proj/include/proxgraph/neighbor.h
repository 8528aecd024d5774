#pragma once

#include <algorithm>
#include <vector>

#include "proxgraph/common.h"

namespace proxgraph {

/// A candidate or edge: target id, squared distance from the list owner, and
/// a freshness bit (new in this round / not seen in the previous one).
struct Neighbor {
    node_id id = kInvalidId;
    float dist = 0.0f;
    bool fresh = false;

    Neighbor() = default;
    Neighbor(node_id i, float d, bool f = false) : id(i), dist(d), fresh(f) {}
};

/// Total order used everywhere: ascending distance, ties by id.
inline bool closer(const Neighbor& a, const Neighbor& b) {
    return a.dist < b.dist || (a.dist == b.dist && a.id < b.id);
}

using NeighborList = std::vector<Neighbor>;

inline void sort_neighbors(NeighborList& list) {
    std::sort(list.begin(), list.end(), closer);
}

inline bool is_strictly_sorted(const NeighborList& list) {
    for (std::size_t i = 1; i < list.size(); ++i) {
        if (!closer(list[i - 1], list[i])) return false;
    }
    return true;
}

std::vector<node_id> ids_of(const NeighborList& list);

}  // namespace proxgraph
