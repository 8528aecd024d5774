#pragma once

#include <cstdint>
#include <string>

#include "proxgraph/dataset.h"

namespace proxgraph {

enum class Distribution { uniform, gaussian, clustered };

Distribution parse_distribution(const std::string& name);
std::string to_string(Distribution d);

struct SyntheticSpec {
    std::size_t n = 1000;
    std::size_t d = 16;
    Distribution distribution = Distribution::uniform;
    std::uint64_t seed = 1;
    // clustered only: number of mixture centers (uniform in [0,1]^d) and the
    // per-coordinate standard deviation around each center.
    std::size_t centers = 10;
    double cluster_stddev = 0.05;
};

/// uniform: [0,1)^d. gaussian: standard normal. clustered: Gaussian mixture,
/// point i drawn from center i % centers. Deterministic given the seed.
Dataset gen_synthetic(const SyntheticSpec& spec);

/// The center index used for row i of a clustered dataset.
inline std::size_t cluster_of(const SyntheticSpec& spec, std::size_t i) { return i % spec.centers; }

}  // namespace proxgraph
