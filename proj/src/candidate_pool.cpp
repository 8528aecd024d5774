#include "proxgraph/candidate_pool.h"

#include <algorithm>

namespace proxgraph {

CandidatePool::CandidatePool(std::size_t capacity) { reset(capacity); }

void CandidatePool::reset(std::size_t capacity) {
    PROXGRAPH_EXPECT(capacity >= 1, "capacity must be positive");
    capacity_ = capacity;
    entries_.clear();
    expanded_.clear();
    entries_.reserve(capacity + 1);
    expanded_.reserve(capacity + 1);
}

std::size_t CandidatePool::insert(const Neighbor& cand) {
    for (const auto& e : entries_) {
        if (e.id == cand.id) return kRejected;
    }
    return insert_new(cand);
}

std::size_t CandidatePool::insert_new(const Neighbor& cand) {
    if (!admits(cand)) return kRejected;
    return place(cand);
}

std::size_t CandidatePool::place(const Neighbor& cand) {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), cand, closer);
    const auto pos = static_cast<std::size_t>(it - entries_.begin());
    entries_.insert(it, cand);
    expanded_.insert(expanded_.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    if (entries_.size() > capacity_) {
        entries_.pop_back();
        expanded_.pop_back();
    }
    return pos;
}

std::size_t CandidatePool::next_unexpanded(std::size_t from) const {
    while (from < entries_.size() && expanded_[from]) ++from;
    return from;
}

}  // namespace proxgraph
