#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "proxgraph/hnsw_builder.h"
#include "proxgraph/search.h"

using namespace proxgraph;

namespace {

void expect_valid_layers(const LayeredGraph& lg) {
    ASSERT_GT(lg.num_layers(), 0u);
    EXPECT_EQ(lg.level(lg.entry_point()), lg.top_layer());
    for (std::size_t i = 0; i < lg.num_layers(); ++i) {
        const auto& g = lg.layer(i);
        EXPECT_EQ(oracle::check_graph(g, false), "") << "layer " << i;
        for (std::size_t u = 0; u < lg.size(); ++u) {
            for (node_id v : g.neighbors(static_cast<node_id>(u))) {
                EXPECT_TRUE(lg.in_layer(v, i));
                EXPECT_TRUE(lg.in_layer(static_cast<node_id>(u), i));
            }
        }
    }
}

}  // namespace

TEST(Layers, GeometricDistribution) {
    const double mf = default_m_factor(16);
    EXPECT_NEAR(mf, 1.0 / std::log(16.0), 1e-15);
    EXPECT_EQ(default_m_factor(1), 1.0);
    const auto a = assign_layers(200000, mf, 1);
    std::size_t above = 0;
    for (auto l : a.levels) above += l >= 1;
    // P(level >= 1) = exp(-1 / mf) = 1/16.
    EXPECT_NEAR(double(above) / 200000.0, 1.0 / 16.0, 0.003);
    EXPECT_EQ(a.levels, assign_layers(200000, mf, 1).levels);
    EXPECT_EQ(a.max_level, *std::max_element(a.levels.begin(), a.levels.end()));
}

TEST(HnswOriginal, StructureAndDeterminism) {
    const auto ds = oracle::uniform(2000, 8, 2);
    HnswParams p;
    p.max_degree = 10;
    p.ef = 32;
    p.record_candidates = true;
    HnswReport r;
    const auto lg = build_hnsw_original(ds, p, &r);
    expect_valid_layers(lg);
    EXPECT_EQ(lg, build_hnsw_original(ds, p));
    ASSERT_EQ(r.insertion_candidates.size(), ds.size());
    EXPECT_TRUE(r.insertion_candidates[0].empty());
    for (std::size_t u = 1; u < ds.size(); ++u) {
        EXPECT_FALSE(r.insertion_candidates[u].empty());
        for (const auto& nb : r.insertion_candidates[u]) EXPECT_LT(nb.id, u);
    }
}

TEST(FastHnsw, StructureAndDeterminism) {
    const auto ds = oracle::uniform(3000, 8, 3);
    FastHnswParams p;
    p.knng.k0 = 16;
    p.max_degree = 10;
    p.ef = 32;
    p.record_candidates = true;
    FastHnswReport r;
    const auto lg = build_fasthnsw(ds, p, &r);
    expect_valid_layers(lg);
    EXPECT_EQ(lg, build_fasthnsw(ds, p));
    EXPECT_EQ(r.layers.size(), lg.num_layers());
    ASSERT_EQ(r.layer0_candidates.size(), ds.size());
    // Layer 0 is reachable from the entry point when repair is on.
    auto g0 = lg.layer(0);
    g0.set_entry_point(lg.entry_point());
    EXPECT_EQ(oracle::check_graph(g0, true), "");
    // Small layers are complete digraphs.
    const auto top = lg.layer_members(lg.top_layer());
    if (top.size() <= p.max_degree) {
        for (node_id u : top) EXPECT_EQ(lg.layer(lg.top_layer()).neighbors(u).size(), top.size() - 1);
    }
}

TEST(FastHnsw, SearchFindsNeighbors) {
    const auto ds = oracle::uniform(3000, 8, 4);
    FastHnswParams p;
    p.knng.k0 = 16;
    p.max_degree = 12;
    p.ef = 40;
    const auto lg = build_fasthnsw(ds, p);
    const auto qs = oracle::uniform(200, 8, 5);
    double s = 0.0;
    for (node_id i = 0; i < qs.size(); ++i) {
        s += oracle::recall(ids_of(layered_search(lg, ds, qs.row(i), 10, 100)), oracle::brute_knn(ds, qs.row(i), 10));
    }
    EXPECT_GT(s / double(qs.size()), 0.95);
}
