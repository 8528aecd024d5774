#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "proxgraph/common.h"

namespace proxgraph {

/// Dense row-major collection of n d-dimensional float vectors. Row i is id i.
class Dataset {
 public:
    Dataset() = default;

    /// Takes ownership of `values` (n*d floats). Throws ArgumentError when n or d
    /// is zero, the buffer size disagrees, or any value is non-finite.
    Dataset(std::size_t n, std::size_t d, std::vector<float> values);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }
    bool empty() const { return n_ == 0; }

    std::span<const float> row(node_id i) const {
        return {values_.data() + static_cast<std::size_t>(i) * d_, d_};
    }
    std::span<const float> values() const { return values_; }

    void prefetch(node_id i) const {
        const char* p = reinterpret_cast<const char*>(values_.data() + static_cast<std::size_t>(i) * d_);
        const std::size_t bytes = d_ * sizeof(float);
        for (std::size_t off = 0; off < bytes; off += 64) __builtin_prefetch(p + off);
    }

    /// Copies the selected rows into a new dataset; local id j is ids[j].
    Dataset subset(std::span<const node_id> ids) const;

    /// Arithmetic mean of all rows.
    std::vector<float> centroid() const;

    bool operator==(const Dataset& other) const = default;

 private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<float> values_;
};

}  // namespace proxgraph
