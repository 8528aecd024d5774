#include "proxgraph/distance.h"

#include <algorithm>
#include <cmath>

namespace proxgraph {

float squared_l2(std::span<const float> a, std::span<const float> b) {
    PROXGRAPH_EXPECT(a.size() == b.size(), "dimension mismatch");
    const std::size_t d = a.size();
    const float* pa = a.data();
    const float* pb = b.data();
    float lane[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    std::size_t i = 0;
    for (; i + 8 <= d; i += 8) {
        for (std::size_t j = 0; j < 8; ++j) {
            const float t = pa[i + j] - pb[i + j];
            lane[j] += t * t;
        }
    }
    for (; i < d; ++i) {
        const float t = pa[i] - pb[i];
        lane[0] += t * t;
    }
    return ((lane[0] + lane[4]) + (lane[2] + lane[6])) + ((lane[1] + lane[5]) + (lane[3] + lane[7]));
}

double cos_angle_from_squared(double uw_sq, double vw_sq, double uv_sq) {
    if (uw_sq <= 0.0 || vw_sq <= 0.0) {
        throw DegenerateAngle("cos_angle_from_squared: apex coincides with an endpoint");
    }
    const double c = (uw_sq + vw_sq - uv_sq) / (2.0 * std::sqrt(uw_sq * vw_sq));
    return std::clamp(c, -1.0, 1.0);
}

double cos_angle_at(std::span<const float> w, std::span<const float> u, std::span<const float> v) {
    return cos_angle_from_squared(squared_l2(u, w), squared_l2(v, w), squared_l2(u, v));
}

}  // namespace proxgraph
