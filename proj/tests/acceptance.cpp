// Acceptance suite. Each criterion prints one line:
//   criterion N: PASS|FAIL <measurements>
// Usage: acceptance [--criterion N]... (default: all except 10)

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "proxgraph/bench.h"
#include "proxgraph/hnsw_builder.h"
#include "proxgraph/index_io.h"
#include "proxgraph/nsg_builder.h"
#include "proxgraph/oracle.h"
#include "proxgraph/prune.h"
#include "proxgraph/search.h"

using namespace proxgraph;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream msg;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            msg << " [violated: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 4) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(prec);
    os << v;
    return os.str();
}

// 1. Pruning and search against brute-force oracles.
void criterion1(Verdict& v) {
    std::mt19937 rng(20240601);
    std::size_t prune_lists = 0, prune_bad = 0, search_bad = 0, alpha_bad = 0;
    for (int inst = 0; inst < 50; ++inst) {
        const std::size_t n = 10 + rng() % 191;
        const std::size_t d = 1 + rng() % 8;
        const auto ds = oracle::uniform(n, d, 7000 + inst);
        auto dist = [&ds](node_id a, node_id b) { return squared_l2(ds.row(a), ds.row(b)); };
        for (int rep = 0; rep < 5; ++rep) {
            const auto u = static_cast<node_id>(rng() % n);
            std::vector<node_id> ids;
            for (std::size_t x = 0; x < n; ++x) {
                if (x != u && rng() % 2) ids.push_back(static_cast<node_id>(x));
            }
            if (ids.empty()) continue;
            const auto c = oracle::make_candidates(ds, u, ids);
            const std::size_t m = 1 + rng() % 32;
            ++prune_lists;
            prune_bad += ids_of(rng_prune(ds, c, m)) != oracle::dominance_filter(c, m, 60.0, dist);
        }
        ProximityGraph g(n, n - 1);
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<node_id> all;
            for (std::size_t y = 0; y < n; ++y) {
                if (y != x) all.push_back(static_cast<node_id>(y));
            }
            g.set_neighbors(static_cast<node_id>(x), all);
        }
        const auto q = oracle::uniform(1, d, 9000 + inst);
        const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 20);
        const auto got = kann_search(g, ds, q.row(0), k, n, static_cast<node_id>(rng() % n));
        search_bad += ids_of(got) != oracle::brute_knn(ds, q.row(0), k);
    }
    const auto ds = oracle::uniform(200, 8, 31);
    for (int i = 0; i < 100; ++i) {
        const auto u = static_cast<node_id>(rng() % 200);
        std::vector<node_id> ids;
        for (node_id x = 0; x < 200; ++x) {
            if (x != u && rng() % 3 == 0) ids.push_back(x);
        }
        const auto c = oracle::make_candidates(ds, u, ids);
        const std::size_t m = 1 + rng() % 40;
        alpha_bad += ids_of(alpha_prune(ds, c, m, 60.0)) != ids_of(rng_prune(ds, c, m));
    }
    v.msg << "rng_prune vs oracle " << prune_lists - prune_bad << "/" << prune_lists << " equal; "
          << "complete-graph search vs exact " << 50 - search_bad << "/50 equal; "
          << "alpha60 vs rng " << 100 - alpha_bad << "/100 equal";
    v.check(prune_bad == 0, "rng_prune mismatch");
    v.check(search_bad == 0, "search mismatch");
    v.check(alpha_bad == 0, "alpha=60 mismatch");
}

// 2. Pruning frequencies in the plane and the angle at the dominating neighbor.
void criterion2(Verdict& v) {
    for (double a : {70.0, 90.0, 120.0}) {
        const auto r = montecarlo_pruning_frequency(a, 100000, 11);
        v.msg << "alpha " << a << ": freq " << fmt(r.frequency) << " vs " << fmt(r.expected) << "; ";
        v.check(std::abs(r.frequency - r.expected) <= 0.02, "pruning frequency at alpha " + fmt(a, 0));
    }
    const auto f = montecarlo_pruning_angle(20000, 64, 100, 500, 12);
    v.msg << "mean pruning angle d=64 " << fmt(f.mean_degrees, 2) << " deg (95% CI +-" << fmt(f.ci95_degrees, 2)
          << ", " << f.prunings << " prunings), target [95, 105]";
    v.check(f.mean_degrees >= 95.0 && f.mean_degrees <= 105.0, "mean angle outside [95, 105]");
}

// 3. Sampling bound coverage and sample-size formula.
void criterion3(Verdict& v) {
    const auto r = montecarlo_sampling_bound(5000, 16, 10, 0.6, 1.0, 500, 13, 1);
    const std::size_t ns = sample_size(1000000, 0.6, 1.0);
    v.msg << "n_s=" << r.n_s << " true r=" << fmt(r.true_recall) << " coverage " << fmt(r.coverage)
          << " (required " << fmt(r.required) << ") max |err| " << fmt(r.max_error) << "; n_s(1e6)=" << ns;
    v.check(r.coverage >= r.required, "coverage below 1 - 1/n");
    v.check(ns == 354, "n_s(1e6) != 354");
}

// 4. Cached rounds are bit-identical and cheaper.
void criterion4(Verdict& v) {
    std::size_t identical = 0;
    double min_red2 = 1.0, min_red3 = 1.0;
    bool strictly_lower = true;
    for (int cfg = 0; cfg < 10; ++cfg) {
        const auto ds = oracle::uniform(5000, 32, 400 + cfg);
        KnngParams kp;
        kp.k0 = 20;
        kp.seed = 500 + cfg;
        CnaParams p;
        p.k = 20;
        p.L = 40;
        p.max_degree = 20;
        p.alpha_degrees = 60.0 + cfg;
        auto a = cna_from_knng(ds, build_knng(ds, kp), p.k, p.L, 600 + cfg);
        auto b = a;
        bool same = true;
        for (int it = 1; it <= 3; ++it) {
            IterationStats sa, sb;
            ProximityGraph ga, gb;
            a = opt_kcna(a, ds, p, &sa, &ga);
            b = opt_kcna_cached(std::move(b), ds, p, &sb, &gb);
            same = same && ga == gb;
            for (std::size_t u = 0; u < ds.size() && same; ++u) {
                const auto& la = a.lists[u];
                const auto& lb = b.lists[u];
                same = la.size() == lb.size();
                for (std::size_t j = 0; j < la.size() && same; ++j) {
                    same = la[j].id == lb[j].id && la[j].dist == lb[j].dist && la[j].fresh == lb[j].fresh;
                }
            }
            if (it >= 2) {
                const double red = 1.0 - double(sb.distance_total()) / double(sa.distance_total());
                strictly_lower = strictly_lower && sb.distance_total() < sa.distance_total() &&
                                 sb.refine.angle <= sa.refine.angle;
                (it == 2 ? min_red2 : min_red3) = std::min(it == 2 ? min_red2 : min_red3, red);
            }
        }
        identical += same;
    }
    v.msg << identical << "/10 configs bit-identical; min distance-call reduction iter2 " << fmt(100 * min_red2, 1)
          << "%, iter3 " << fmt(100 * min_red3, 1) << "% (expected >= 20%)";
    v.check(identical == 10, "cached output differs");
    v.check(strictly_lower, "cached counts not strictly lower");
    v.check(min_red3 >= 0.20, "iteration-3 reduction below 20%");
}

struct NsgRun {
    ProximityGraph ori, fast;
    double ori_seconds = 0.0, fast_seconds = 0.0;
    BuildReport ori_report, fast_report;
};

// OriNSG and FastNSG at matched M, k, L. Each uses its own KNNG degree: the
// original needs a denser KNNG to search on, the self-iterative one starts
// from a sparse one.
NsgRun build_nsg_pair(const Dataset& ds, std::uint64_t seed) {
    NsgRun r;
    NsgParams op;
    op.knng.k0 = 40;
    op.knng.seed = seed;
    op.k = 20;
    op.L = 40;
    op.max_degree = 20;
    op.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    r.ori = build_nsg_original(ds, op, &r.ori_report);
    r.ori_seconds = seconds_since(t0);

    FastNsgParams fp;
    fp.knng.k0 = 20;
    fp.knng.seed = seed;
    fp.k = 20;
    fp.L = 40;
    fp.max_degree = 20;
    fp.alpha_degrees = 66.0;
    fp.max_iters = 2;
    fp.seed = seed;
    t0 = std::chrono::steady_clock::now();
    r.fast = build_fastnsg(ds, fp, &r.fast_report);
    r.fast_seconds = seconds_since(t0);
    return r;
}

std::vector<double> sweep_recall(const AnyGraph& g, const Dataset& ds, const Dataset& qs, const IdTable& truth,
                                 const std::vector<std::size_t>& ls) {
    std::vector<double> out;
    for (const auto& row : search_sweep(g, ds, qs, truth, 10, ls)) out.push_back(row.recall);
    return out;
}

// 5. Search quality parity of FastNSG and OriNSG.
void criterion5(Verdict& v) {
    const auto ds = oracle::uniform(10000, 16, 5);
    const auto qs = oracle::uniform(1000, 16, 55);
    const auto truth = ground_truth_table(ds, qs, 10);
    const auto r = build_nsg_pair(ds, 1);
    const std::vector<std::size_t> ls{40, 100};
    const auto ro = sweep_recall(r.ori, ds, qs, truth, ls);
    const auto rf = sweep_recall(r.fast, ds, qs, truth, ls);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        v.msg << "L=" << ls[i] << " ori " << fmt(ro[i]) << " fast " << fmt(rf[i]) << "; ";
        v.check(std::abs(ro[i] - rf[i]) <= 0.02, "recall gap at L=" + std::to_string(ls[i]));
    }
    v.msg << "build ori " << fmt(r.ori_seconds, 2) << " s, fast " << fmt(r.fast_seconds, 2) << " s";
    v.check(ro[1] >= 0.95 && rf[1] >= 0.95, "recall@10 below 0.95 at L=100");
}

std::string nsg_timing(const NsgRun& r) {
    std::ostringstream os;
    os << "ori " << fmt(r.ori_seconds, 1) << " s (knng " << fmt(r.ori_report.knng_seconds, 1) << ", search "
       << fmt(r.ori_report.search_seconds, 1) << ", refine " << fmt(r.ori_report.refine_seconds, 1) << ") fast "
       << fmt(r.fast_seconds, 1) << " s (knng " << fmt(r.fast_report.knng_seconds, 1) << ", rounds "
       << fmt(r.fast_report.search_seconds, 1) << ", refine " << fmt(r.fast_report.refine_seconds, 1) << ")";
    return os.str();
}

// 6. FastNSG builds faster at n = 1e5, d = 64.
void criterion6(Verdict& v) {
    const auto ds = oracle::uniform(100000, 64, 6);
    const auto r = build_nsg_pair(ds, 1);
    const double speedup = r.ori_seconds / r.fast_seconds;
    v.msg << nsg_timing(r) << "; speedup " << fmt(speedup, 2) << "x, threads " << omp_get_max_threads();
    v.check(speedup > 1.0, "FastNSG not faster");
}

struct HnswPair {
    LayeredGraph ori, fast;
    HnswReport ori_report;
    FastHnswReport fast_report;
};

HnswPair build_hnsw_pair(const Dataset& ds) {
    HnswPair p;
    HnswParams hp;
    hp.max_degree = 16;
    hp.ef = 64;
    hp.record_candidates = true;
    p.ori = build_hnsw_original(ds, hp, &p.ori_report);
    FastHnswParams fp;
    fp.knng.k0 = 32;
    fp.max_degree = 16;
    fp.ef = 64;
    fp.record_candidates = true;
    p.fast = build_fasthnsw(ds, fp, &p.fast_report);
    return p;
}

double mean_candidate_recall(const std::vector<NeighborList>& cands, const std::vector<NeighborList>& exact,
                             std::size_t k) {
    double s = 0.0;
    for (std::size_t u = 0; u < cands.size(); ++u) {
        std::vector<node_id> got, truth;
        for (std::size_t j = 0; j < std::min(k, cands[u].size()); ++j) got.push_back(cands[u][j].id);
        for (std::size_t j = 0; j < k; ++j) truth.push_back(exact[u][j].id);
        s += oracle::recall(got, truth);
    }
    return s / double(cands.size());
}

// 7. Candidate quality: insertion-time HNSW vs layer-global FastHNSW.
void criterion7(Verdict& v) {
    const auto ds = oracle::uniform(10000, 16, 7);
    const auto p = build_hnsw_pair(ds);
    const auto exact = exact_knn_all(ds, 10);
    const double ori = mean_candidate_recall(p.ori_report.insertion_candidates, exact, 10);
    const double fast = mean_candidate_recall(p.fast_report.layer0_candidates, exact, 10);
    v.msg << "k-CNA recall@10: HNSW insertion-time " << fmt(ori) << " (<= 0.55), FastHNSW layer 0 " << fmt(fast)
          << " (> 0.7)";
    v.check(ori <= 0.55, "HNSW insertion recall above 0.55");
    v.check(fast > 0.7, "FastHNSW layer-0 recall not above 0.7");
}

// 8. FastHNSW search recall is at least OriHNSW's at each L.
void criterion8(Verdict& v) {
    const auto ds = oracle::uniform(10000, 16, 7);
    const auto qs = oracle::uniform(1000, 16, 77);
    const auto truth = ground_truth_table(ds, qs, 10);
    const auto p = build_hnsw_pair(ds);
    const std::vector<std::size_t> ls{20, 40, 100};
    const auto ro = sweep_recall(p.ori, ds, qs, truth, ls);
    const auto rf = sweep_recall(p.fast, ds, qs, truth, ls);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        v.msg << "L=" << ls[i] << " ori " << fmt(ro[i]) << " fast " << fmt(rf[i]) << " (margin "
              << fmt(rf[i] - ro[i]) << "); ";
        v.check(rf[i] >= ro[i], "FastHNSW below OriHNSW at L=" + std::to_string(ls[i]));
    }
}

// 9. Structural invariants over all four builders.
void criterion9(Verdict& v) {
    const auto ds = oracle::uniform(2000, 8, 9);
    std::size_t checks = 0;
    auto flat = [&](const ProximityGraph& g, const std::string& name, bool connected) {
        ++checks;
        const auto err = oracle::check_graph(g, connected);
        v.check(err.empty(), name + ": " + err);
        const auto back = decode_index(encode_index(g, 8));
        v.check(std::get<ProximityGraph>(back) == g, name + ": index round trip");
    };
    auto layered = [&](const LayeredGraph& lg, const std::string& name, bool connected0) {
        for (std::size_t i = 0; i < lg.num_layers(); ++i) {
            ++checks;
            auto g = lg.layer(i);
            for (std::size_t u = 0; u < lg.size(); ++u) {
                for (node_id w : g.neighbors(static_cast<node_id>(u))) {
                    v.check(lg.in_layer(w, i) && lg.in_layer(static_cast<node_id>(u), i), name + ": layer nesting");
                }
            }
            g.set_entry_point(lg.entry_point());
            const auto err = oracle::check_graph(g, connected0 && i == 0);
            v.check(err.empty(), name + " layer " + std::to_string(i) + ": " + err);
        }
        const auto back = decode_index(encode_index(lg, 8));
        v.check(std::get<LayeredGraph>(back) == lg, name + ": index round trip");
    };

    NsgParams np;
    np.knng.k0 = 16;
    np.max_degree = 12;
    const auto ori = build_nsg_original(ds, np);
    flat(ori, "ori-nsg", true);
    v.check(ori == build_nsg_original(ds, np), "ori-nsg rebuild differs");

    FastNsgParams fp;
    fp.knng.k0 = 12;
    fp.max_degree = 12;
    fp.keep_candidates = true;
    BuildReport fr;
    const auto fast = build_fastnsg(ds, fp, &fr);
    flat(fast, "fast-nsg", true);
    v.check(fast == build_fastnsg(ds, fp), "fast-nsg rebuild differs");
    for (std::size_t u = 0; u < fr.candidates.size(); ++u) {
        const auto& l = fr.candidates[u];
        std::set<node_id> ids;
        for (const auto& nb : l) ids.insert(nb.id);
        v.check(is_strictly_sorted(l) && ids.size() == l.size() && !ids.count(static_cast<node_id>(u)),
                "candidate list " + std::to_string(u));
    }

    HnswParams hp;
    hp.max_degree = 12;
    hp.ef = 32;
    const auto h = build_hnsw_original(ds, hp);
    layered(h, "ori-hnsw", false);
    v.check(h == build_hnsw_original(ds, hp), "ori-hnsw rebuild differs");

    FastHnswParams fh;
    fh.knng.k0 = 16;
    fh.max_degree = 12;
    fh.ef = 32;
    const auto f = build_fasthnsw(ds, fh);
    layered(f, "fast-hnsw", true);
    v.check(f == build_fasthnsw(ds, fh), "fast-hnsw rebuild differs");

    const auto rp = oracle::rank_path_check(50, 30, 66.0, 17);
    v.msg << checks << " graph/layer checks, 4 rebuilds, 4 index round trips, " << fr.candidates.size()
          << " candidate lists; rank-path implication on " << rp.instances << " instances (n<=200): "
          << rp.premises - rp.violations << "/" << rp.premises << " premises hold";
    v.check(rp.violations == 0, "rank-path implication violated");
}

// 10. FastNSG speedup does not shrink as n grows.
void criterion10(Verdict& v) {
    std::vector<double> speedups;
    for (std::size_t n : {25000u, 50000u, 100000u}) {
        const auto ds = oracle::uniform(n, 64, 10);
        const auto r = build_nsg_pair(ds, 1);
        speedups.push_back(r.ori_seconds / r.fast_seconds);
        v.msg << "n=" << n << ": " << nsg_timing(r) << ", speedup " << fmt(speedups.back(), 2) << "x; ";
    }
    for (std::size_t i = 1; i < speedups.size(); ++i) {
        v.check(speedups[i] >= 0.9 * speedups[i - 1], "speedup drops more than 10% at step " + std::to_string(i));
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<void(Verdict&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                              criterion5, criterion6, criterion7, criterion8,
                                                              criterion9, criterion10};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty()) {
        for (int c = 1; c <= 9; ++c) selected.push_back(c);
    }
    bool all = true;
    for (int c : selected) {
        if (c < 1 || c > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "no criterion %d\n", c);
            return 2;
        }
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[static_cast<std::size_t>(c - 1)](v);
        } catch (const std::exception& e) {
            v.check(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s %s (%.1f s)\n", c, v.pass ? "PASS" : "FAIL", v.msg.str().c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
