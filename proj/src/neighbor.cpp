#include "proxgraph/neighbor.h"

namespace proxgraph {

std::vector<node_id> ids_of(const NeighborList& list) {
    std::vector<node_id> ids;
    ids.reserve(list.size());
    for (const auto& nb : list) ids.push_back(nb.id);
    return ids;
}

}  // namespace proxgraph
