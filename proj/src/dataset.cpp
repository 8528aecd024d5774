#include "proxgraph/dataset.h"

#include <cmath>
#include <string>

namespace proxgraph {

Dataset::Dataset(std::size_t n, std::size_t d, std::vector<float> values)
        : n_(n), d_(d), values_(std::move(values)) {
    if (n_ == 0 || d_ == 0) {
        throw ArgumentError("Dataset: n and d must be positive (n=" + std::to_string(n_) +
                            ", d=" + std::to_string(d_) + ")");
    }
    if (values_.size() != n_ * d_) {
        throw ArgumentError("Dataset: expected " + std::to_string(n_ * d_) + " values, got " +
                            std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ArgumentError("Dataset: non-finite value in row " + std::to_string(i / d_));
        }
    }
}

Dataset Dataset::subset(std::span<const node_id> ids) const {
    std::vector<float> out;
    out.reserve(ids.size() * d_);
    for (node_id id : ids) {
        auto r = row(id);
        out.insert(out.end(), r.begin(), r.end());
    }
    return Dataset(ids.size(), d_, std::move(out));
}

std::vector<float> Dataset::centroid() const {
    std::vector<double> acc(d_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        auto r = row(static_cast<node_id>(i));
        for (std::size_t j = 0; j < d_; ++j) acc[j] += r[j];
    }
    std::vector<float> c(d_);
    for (std::size_t j = 0; j < d_; ++j) c[j] = static_cast<float>(acc[j] / static_cast<double>(n_));
    return c;
}

}  // namespace proxgraph
