#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "proxgraph/neighbor.h"

namespace proxgraph {

/// Bounded array of the L best candidates seen so far, ascending by (dist, id),
/// with an expanded bit per slot. Single-owner; not thread-safe.
class CandidatePool {
 public:
    static constexpr std::size_t kRejected = std::numeric_limits<std::size_t>::max();

    explicit CandidatePool(std::size_t capacity = 1);

    /// Clears entries and sets a new capacity (>= 1).
    void reset(std::size_t capacity);

    /// Inserts in sorted position unless the id is already present or the pool
    /// is full and `cand` does not precede the last entry. Returns the slot or
    /// kRejected.
    std::size_t insert(const Neighbor& cand);

    /// insert() without the duplicate-id scan; caller guarantees the id is new.
    std::size_t insert_new(const Neighbor& cand);

    bool offer(const Neighbor& cand) { return insert(cand) != kRejected; }

    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool full() const { return entries_.size() >= capacity_; }

    const Neighbor& operator[](std::size_t i) const { return entries_[i]; }
    bool expanded(std::size_t i) const { return expanded_[i] != 0; }
    void mark_expanded(std::size_t i) { expanded_[i] = 1; }

    /// Index of the first unexpanded entry at or after `from`, or size().
    std::size_t next_unexpanded(std::size_t from) const;

    const NeighborList& entries() const { return entries_; }

    /// Would `cand` be accepted by a full pool (ignoring duplicates)?
    bool admits(const Neighbor& cand) const {
        return !full() || closer(cand, entries_.back());
    }

 private:
    std::size_t place(const Neighbor& cand);

    std::size_t capacity_;
    NeighborList entries_;
    std::vector<unsigned char> expanded_;
};

}  // namespace proxgraph
