#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "proxgraph/hnsw_builder.h"
#include "proxgraph/oracle.h"
#include "proxgraph/prune.h"
#include "proxgraph/search.h"

using namespace proxgraph;

namespace {

ProximityGraph complete_graph(std::size_t n) {
    ProximityGraph g(n, n - 1);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<node_id> ids;
        for (std::size_t v = 0; v < n; ++v) {
            if (v != u) ids.push_back(static_cast<node_id>(v));
        }
        g.set_neighbors(static_cast<node_id>(u), ids);
    }
    return g;
}

}  // namespace

TEST(Search, PathGraphHandTrace) {
    std::vector<float> xs;
    for (int i = 0; i < 10; ++i) xs.push_back(float(i));
    Dataset ds(10, 1, xs);
    ProximityGraph g(10, 1);
    for (node_id i = 0; i + 1 < 10; ++i) g.set_neighbors(i, {i + 1});
    const std::vector<float> q{9.1f};
    const auto res = kann_search(g, ds, q, 1, 2, 0);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].id, 9u);
    const auto tr = kann_search_instrumented(g, ds, q, 1, 2, 0, exact_ranks(ds, q));
    EXPECT_EQ(tr.expansion_order, (std::vector<node_id>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(tr.dist_count, 10u);
    EXPECT_EQ(tr.max_rank_on_path, 10u);
}

TEST(Search, CompleteGraphWithFullWidthIsExact) {
    std::mt19937 rng(1);
    for (int inst = 0; inst < 20; ++inst) {
        const std::size_t n = 20 + rng() % 100;
        const std::size_t d = 1 + rng() % 8;
        const auto ds = oracle::uniform(n, d, 100 + inst);
        const auto g = complete_graph(n);
        const auto q = oracle::uniform(1, d, 500 + inst);
        const std::size_t k = 1 + rng() % 10;
        const auto got = kann_search(g, ds, q.row(0), k, n, static_cast<node_id>(rng() % n));
        EXPECT_EQ(ids_of(got), oracle::brute_knn(ds, q.row(0), k));
        // Every node expanded after the entry point was a pool member.
        const auto rank = exact_ranks(ds, q.row(0));
        const auto tr = kann_search_instrumented(g, ds, q.row(0), std::min<std::size_t>(k, 8), 8, 0, rank);
        for (std::size_t i = 1; i < tr.expansion_order.size(); ++i) EXPECT_LE(rank[tr.expansion_order[i]], 8u);
    }
}

TEST(Search, ResultsSortedAndArgumentsChecked) {
    const auto ds = oracle::uniform(300, 8, 3);
    const auto g = oracle::exact_knng(ds, 8);
    const auto q = oracle::uniform(1, 8, 4);
    const auto res = kann_search(g, ds, q.row(0), 5, 20, 0);
    EXPECT_TRUE(is_strictly_sorted(res));
    EXPECT_THROW(kann_search(g, ds, q.row(0), 21, 20, 0), ArgumentError);
    EXPECT_THROW(kann_search(g, ds, q.row(0), 0, 20, 0), ArgumentError);
    EXPECT_THROW(kann_search(g, ds, q.row(0), 5, 20, 300), ArgumentError);
    const auto short_q = oracle::uniform(1, 3, 4);
    EXPECT_THROW(kann_search(g, ds, short_q.row(0), 5, 20, 0), ArgumentError);
}

TEST(Search, ExcludingSelfDropsOwnId) {
    const auto ds = oracle::uniform(200, 4, 6);
    const auto g = complete_graph(200);
    SearchScratch s;
    for (node_id u : {0u, 17u, 199u}) {
        const auto res = search_excluding_self(g, ds, u, 10, 10, u, s);
        EXPECT_EQ(ids_of(res), oracle::brute_knn(ds, ds.row(u), 10, u));
    }
}

TEST(Search, MeanRecallNonDecreasingInL) {
    const auto ds = oracle::uniform(3000, 16, 8);
    const auto g = oracle::exact_knng(ds, 10);
    const auto qs = oracle::uniform(1000, 16, 9);
    double prev = 0.0;
    for (std::size_t L : {10u, 20u, 40u, 100u}) {
        double s = 0.0;
        SearchScratch scratch;
        for (node_id i = 0; i < qs.size(); ++i) {
            s += oracle::recall(ids_of(kann_search(g, ds, qs.row(i), 10, L, 0, &scratch)),
                                oracle::brute_knn(ds, qs.row(i), 10));
        }
        s /= double(qs.size());
        EXPECT_GE(s, prev - 0.01) << "L=" << L;
        prev = s;
    }
}

TEST(Search, LayeredSearchDescendsGreedily) {
    const auto ds = oracle::uniform(2000, 8, 10);
    HnswParams p;
    p.max_degree = 12;
    p.ef = 40;
    const auto lg = build_hnsw_original(ds, p);
    const auto qs = oracle::uniform(200, 8, 11);
    double low = 0.0, high = 0.0;
    for (node_id i = 0; i < qs.size(); ++i) {
        const auto truth = oracle::brute_knn(ds, qs.row(i), 10);
        low += oracle::recall(ids_of(layered_search(lg, ds, qs.row(i), 10, 20)), truth);
        high += oracle::recall(ids_of(layered_search(lg, ds, qs.row(i), 10, 100)), truth);
    }
    EXPECT_GE(high, low);
    EXPECT_GT(high / double(qs.size()), 0.95);
}

TEST(Search, RankPathImplicationOnSmallInstances) {
    for (double alpha : {60.0, 66.0, 90.0}) {
        const auto c = oracle::rank_path_check(20, 30, alpha, 5);
        EXPECT_GT(c.premises, 1000u);
        EXPECT_EQ(c.violations, 0u) << "alpha " << alpha << ", " << c.premises << " premises";
    }
}
