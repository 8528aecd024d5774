#include "proxgraph/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <omp.h>

#include "proxgraph/distance.h"
#include "proxgraph/knng.h"
#include "proxgraph/nsg_builder.h"
#include "proxgraph/oracle.h"
#include "proxgraph/search.h"
#include "proxgraph/synthetic.h"

namespace proxgraph {

std::vector<std::size_t> normalize_l_values(std::vector<std::size_t> ls, std::size_t k,
                                            std::vector<std::string>* warnings) {
    PROXGRAPH_REQUIRE_ARG(!ls.empty(), "no L values given");
    std::sort(ls.begin(), ls.end());
    std::vector<std::size_t> out;
    for (std::size_t L : ls) {
        PROXGRAPH_REQUIRE_ARG(L >= k, "L=" + std::to_string(L) + " is smaller than k=" + std::to_string(k));
        if (!out.empty() && out.back() == L) {
            if (warnings) warnings->push_back("duplicate L=" + std::to_string(L) + " ignored");
            continue;
        }
        out.push_back(L);
    }
    return out;
}

std::vector<SweepRow> search_sweep(const AnyGraph& index, const Dataset& ds, const Dataset& queries,
                                   const IdTable& truth, std::size_t k, const std::vector<std::size_t>& ls,
                                   std::vector<std::string>* warnings) {
    PROXGRAPH_REQUIRE_ARG(k >= 1, "k must be positive");
    PROXGRAPH_REQUIRE_ARG(truth.rows == queries.size(), "truth table has " + std::to_string(truth.rows) +
                                                                " rows for " + std::to_string(queries.size()) +
                                                                " queries");
    PROXGRAPH_REQUIRE_ARG(truth.cols >= k, "truth table has fewer than k columns");
    PROXGRAPH_REQUIRE_ARG(queries.dim() == ds.dim(), "query dimensionality mismatch");
    const auto values = normalize_l_values(ls, k, warnings);

    std::vector<SweepRow> rows;
    SearchScratch scratch;
    for (std::size_t L : values) {
        SweepRow row;
        row.L = L;
        OpCounters c;
        double recall = 0.0;
        std::vector<NeighborList> results(queries.size());
        const auto t0 = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < queries.size(); ++i) {
            const auto q = queries.row(static_cast<node_id>(i));
            if (const auto* g = std::get_if<ProximityGraph>(&index)) {
                results[i] = kann_search(*g, ds, q, k, L, g->entry_point(), &scratch, &c);
            } else {
                results[i] = layered_search(std::get<LayeredGraph>(index), ds, q, k, L, &scratch, &c);
            }
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (std::size_t i = 0; i < queries.size(); ++i) {
            recall += recall_at_k(ids_of(results[i]), truth.row(i).first(k), k);
        }
        const auto nq = static_cast<double>(queries.size());
        row.recall = recall / nq;
        row.qps = row.seconds > 0.0 ? nq / row.seconds : 0.0;
        row.mean_distances = static_cast<double>(c.distance) / nq;
        rows.push_back(row);
    }
    return rows;
}

PruningFrequencyResult montecarlo_pruning_frequency(double alpha_degrees, std::size_t trials, std::uint64_t seed) {
    PROXGRAPH_REQUIRE_ARG(alpha_degrees > 0.0 && alpha_degrees < 180.0, "alpha must be in (0, 180)");
    PROXGRAPH_REQUIRE_ARG(trials > 0, "need at least one trial");
    const double pi = std::numbers::pi;
    const double alpha = alpha_degrees * pi / 180.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> len(0.0, 1.0);
    std::uniform_real_distribution<double> dir(0.0, 2.0 * pi);

    std::size_t hits = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        // w at the origin, u at angle phi, v at phi + alpha.
        double a, b, uv;
        do {
            a = 1.0 - len(rng);
            b = 1.0 - len(rng);
            uv = std::sqrt(a * a + b * b - 2.0 * a * b * std::cos(alpha));
        } while (!(a < uv && b < uv));
        const double phi = dir(rng);
        const double ux = a * std::cos(phi), uy = a * std::sin(phi);
        const double vx = b * std::cos(phi + alpha), vy = b * std::sin(phi + alpha);
        // A query at infinity in direction theta ranks points by their
        // projection on theta, larger projection = closer.
        const double theta = dir(rng);
        const double cx = std::cos(theta), cy = std::sin(theta);
        const double pu = ux * cx + uy * cy;
        const double pv = vx * cx + vy * cy;
        if (pu > 0.0 && pv > 0.0) ++hits;
    }
    PruningFrequencyResult r;
    r.alpha_degrees = alpha_degrees;
    r.trials = trials;
    r.frequency = static_cast<double>(hits) / static_cast<double>(trials);
    r.expected = (pi - alpha) / (2.0 * pi);
    r.std_error = std::sqrt(r.frequency * (1.0 - r.frequency) / static_cast<double>(trials));
    r.prunings_per_rank_increase = hits ? 1.0 / r.frequency : 0.0;
    r.prunings_expected = 2.0 * pi / (pi - alpha);
    return r;
}

PruningAngleResult montecarlo_pruning_angle(std::size_t n, std::size_t dim, std::size_t candidates,
                                            std::size_t samples, std::uint64_t seed) {
    PROXGRAPH_REQUIRE_ARG(candidates >= 2 && candidates < n, "need 2 <= candidates < n");
    PROXGRAPH_REQUIRE_ARG(samples >= 1 && samples <= n, "need 1 <= samples <= n");
    const Dataset ds = gen_synthetic({n, dim, Distribution::uniform, seed});
    const auto nodes = sample_nodes(n, samples, seed + 1);

    std::vector<std::vector<double>> angles(nodes.size());
    const auto ns = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < ns; ++i) {
        const node_id u = nodes[static_cast<std::size_t>(i)];
        const auto cands = exact_knn(ds, ds.row(u), candidates, u);
        std::vector<Neighbor> kept;
        for (const auto& v : cands) {
            bool pruned = false;
            for (const auto& w : kept) {
                if (!(w.dist < v.dist)) continue;
                if (!(squared_l2(ds.row(w.id), ds.row(v.id)) < v.dist)) continue;
                const double c = cos_angle_at(ds.row(w.id), ds.row(u), ds.row(v.id));
                angles[static_cast<std::size_t>(i)].push_back(std::acos(c) * 180.0 / std::numbers::pi);
                pruned = true;
                break;
            }
            if (!pruned) kept.push_back(v);
        }
    }
    PruningAngleResult r;
    r.n = n;
    r.dim = dim;
    r.candidates = candidates;
    r.samples = samples;
    r.histogram.assign(18, 0);
    double sum = 0.0, sq = 0.0;
    for (const auto& list : angles) {
        for (double a : list) {
            ++r.prunings;
            sum += a;
            sq += a * a;
            r.histogram[std::min<std::size_t>(17, static_cast<std::size_t>(a / 10.0))]++;
        }
    }
    if (r.prunings > 0) {
        const auto m = static_cast<double>(r.prunings);
        r.mean_degrees = sum / m;
        r.std_degrees = std::sqrt(std::max(0.0, sq / m - r.mean_degrees * r.mean_degrees));
        r.ci95_degrees = 1.96 * r.std_degrees / std::sqrt(m);
    }
    return r;
}

SamplingBoundResult montecarlo_sampling_bound(std::size_t n, std::size_t dim, std::size_t k, double epsilon,
                                              double l, std::size_t trials, std::uint64_t seed,
                                              std::size_t knng_iters) {
    PROXGRAPH_REQUIRE_ARG(trials > 0, "need at least one trial");
    const Dataset ds = gen_synthetic({n, dim, Distribution::uniform, seed});
    KnngParams kp;
    kp.k0 = k;
    kp.iters = knng_iters;
    kp.seed = seed + 1;
    const auto knng = build_knng(ds, kp);
    const auto exact = exact_knn_all(ds, k);

    std::vector<double> per_node(n);
    double total = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        per_node[u] = recall_at_k(ids_of(knng.lists[u]), ids_of(exact[u]), k);
        total += per_node[u];
    }
    SamplingBoundResult r;
    r.n = n;
    r.trials = trials;
    r.epsilon = epsilon;
    r.l = l;
    r.true_recall = total / static_cast<double>(n);
    r.n_s = std::min(sample_size(n, epsilon, l), n);
    r.required = 1.0 - std::pow(static_cast<double>(n), -l);
    std::size_t inside = 0;
    double abs_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        double s = 0.0;
        for (node_id u : sample_nodes(n, r.n_s, seed + 100 + t)) s += per_node[u];
        const double err = std::abs(s / static_cast<double>(r.n_s) - r.true_recall);
        if (err < epsilon / 2.0) ++inside;
        r.max_error = std::max(r.max_error, err);
        abs_sum += err;
    }
    r.coverage = static_cast<double>(inside) / static_cast<double>(trials);
    r.mean_abs_error = abs_sum / static_cast<double>(trials);
    return r;
}

std::string environment_stamp() {
    std::ostringstream os;
#if defined(__clang__)
    os << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
    os << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#endif
    os << "; threads " << omp_get_max_threads() << "; hw " << std::thread::hardware_concurrency();
    return os.str();
}

}  // namespace proxgraph
