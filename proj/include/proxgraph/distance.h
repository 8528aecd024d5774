#pragma once

#include <cstdint>
#include <span>

#include "proxgraph/common.h"

namespace proxgraph {

/// Squared Euclidean distance.
///
/// Summation order is fixed: eight interleaved float lanes (lane j accumulates
/// coordinates i with i % 8 == j), a scalar tail folded into lane 0, then the
/// lanes are combined as ((l0+l4)+(l2+l6)) + ((l1+l5)+(l3+l7)). The result is
/// therefore independent of compiler vectorization and exactly symmetric.
float squared_l2(std::span<const float> a, std::span<const float> b);

/// Thrown by cos_angle_at when the apex coincides with one of the endpoints.
struct DegenerateAngle : std::domain_error {
    using std::domain_error::domain_error;
};

/// Cosine of the angle at `w` in triangle (u, w, v), clamped to [-1, 1].
/// The angle exceeds alpha exactly when the returned value is below cos(alpha).
double cos_angle_at(std::span<const float> w, std::span<const float> u,
                    std::span<const float> v);

/// Same law-of-cosines evaluation from squared side lengths:
/// |uw|^2, |vw|^2 and the opposite side |uv|^2.
double cos_angle_from_squared(double uw_sq, double vw_sq, double uv_sq);

/// Kernel invocation counters. Plain integers: each counter has one owner.
struct OpCounters {
    std::uint64_t distance = 0;
    std::uint64_t angle = 0;

    OpCounters& operator+=(const OpCounters& o) {
        distance += o.distance;
        angle += o.angle;
        return *this;
    }
};

}  // namespace proxgraph
