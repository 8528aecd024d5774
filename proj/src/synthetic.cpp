#include "proxgraph/synthetic.h"

#include <random>

namespace proxgraph {

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform") return Distribution::uniform;
    if (name == "gaussian") return Distribution::gaussian;
    if (name == "clustered") return Distribution::clustered;
    throw ArgumentError("unknown distribution '" + name + "'");
}

std::string to_string(Distribution d) {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::gaussian: return "gaussian";
        case Distribution::clustered: return "clustered";
    }
    return "uniform";
}

Dataset gen_synthetic(const SyntheticSpec& spec) {
    PROXGRAPH_REQUIRE_ARG(spec.n >= 1 && spec.d >= 1, "n and d must be positive");
    std::mt19937_64 rng(spec.seed);
    std::vector<float> values(spec.n * spec.d);
    switch (spec.distribution) {
        case Distribution::uniform: {
            std::uniform_real_distribution<float> u(0.0f, 1.0f);
            for (auto& v : values) v = u(rng);
            break;
        }
        case Distribution::gaussian: {
            std::normal_distribution<float> g(0.0f, 1.0f);
            for (auto& v : values) v = g(rng);
            break;
        }
        case Distribution::clustered: {
            PROXGRAPH_REQUIRE_ARG(spec.centers >= 1, "clustered data needs at least one center");
            std::uniform_real_distribution<float> u(0.0f, 1.0f);
            std::vector<float> centers(spec.centers * spec.d);
            for (auto& c : centers) c = u(rng);
            std::normal_distribution<float> g(0.0f, static_cast<float>(spec.cluster_stddev));
            for (std::size_t i = 0; i < spec.n; ++i) {
                const float* c = centers.data() + cluster_of(spec, i) * spec.d;
                for (std::size_t j = 0; j < spec.d; ++j) values[i * spec.d + j] = c[j] + g(rng);
            }
            break;
        }
    }
    return Dataset(spec.n, spec.d, std::move(values));
}

}  // namespace proxgraph
