#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "maxmaxflow/flowcut.hpp"
#include "maxmaxflow/generate.hpp"
#include "oracles.hpp"

using namespace maxmaxflow;

TEST(MaxFlow, MatchesSubsetMinCutWithValidCertificate) {
  Rng rng(101);
  for (int t = 0; t < 150; ++t) {
    const auto g = gen::multigraph(rng, 2, 8, 3);
    const Vertex x = gen::vertex(rng, g.vertex_count());
    Vertex y = gen::vertex(rng, g.vertex_count());
    if (x == y) y = (x + 1) % g.vertex_count();
    const auto cert = max_flow(g, x, y);
    EXPECT_EQ(cert.value, oracle::min_cut(g, x, y)) << serialize_graph(g);
    EXPECT_TRUE(set_contains(cert.side, x));
    EXPECT_FALSE(set_contains(cert.side, y));
    const auto c = cocycle_of(g, cert.side);
    EXPECT_EQ(c.weight, cert.value);
    EXPECT_EQ(c.edges, cert.cut_edges);
  }
}

TEST(MaxFlow, DisconnectedPairHasZeroFlow) {
  WeightedMultigraph g(4);
  g.add_edge(0, 1, 3);
  g.add_edge(2, 3, 5);
  const auto cert = max_flow(g, 0, 3);
  EXPECT_EQ(cert.value, 0);
  EXPECT_EQ(cert.side, (VertexSet{0, 1}));
}

TEST(GomoryHu, BottlenecksAndElementaryCocyclesAreMinimumCuts) {
  Rng rng(202);
  for (int t = 0; t < 150; ++t) {
    const auto g = gen::multigraph(rng, 2, 8, 3);
    const auto tree = gomory_hu(g);
    ASSERT_EQ(tree.n, g.vertex_count());
    ASSERT_EQ(tree.edges.size(), static_cast<size_t>(g.vertex_count() - 1));
    EXPECT_TRUE(is_connected(tree_as_graph(tree)));
    for (int x = 0; x < g.vertex_count(); ++x)
      for (int y = x + 1; y < g.vertex_count(); ++y)
        EXPECT_EQ(tree_path_bottleneck(tree, x, y), oracle::min_cut(g, x, y)) << serialize_graph(g);
    for (size_t i = 0; i < tree.edges.size(); ++i) {
      const auto c = elementary_cocycle(g, tree, i);
      EXPECT_EQ(c.weight, tree.edges[i].w);
      EXPECT_TRUE(set_contains(c.side, tree.edges[i].u));
      EXPECT_FALSE(set_contains(c.side, tree.edges[i].v));
    }
  }
}

TEST(Lambda, FlowBlockwiseCocycleAndSubsetRoutesAgree) {
  Rng rng(303);
  for (int t = 0; t < 150; ++t) {
    const auto g = gen::multigraph(rng, 2, 8, 3);
    const Rational lambda = maxmaxflow::maxmaxflow(g);
    EXPECT_EQ(lambda, oracle::lambda(g)) << serialize_graph(g);
    EXPECT_EQ(lambda, maxmaxflow_blockwise(g));
    EXPECT_EQ(lambda, lambda_tilde_bruteforce(g));
  }
}

TEST(Lambda, NeedsTwoVertices) {
  EXPECT_THROW(maxmaxflow::maxmaxflow(WeightedMultigraph(1)), GraphError);
  EXPECT_EQ(maxmaxflow::maxmaxflow(WeightedMultigraph(2)), 0);
}

TEST(Lambda, ParallelizationLeavesItUnchanged) {
  Rng rng(304);
  for (int t = 0; t < 40; ++t) {
    const auto g = gen::multigraph(rng, 2, 6, 2);
    EXPECT_EQ(maxmaxflow::maxmaxflow(parallelize(g, 3)), maxmaxflow::maxmaxflow(g));
    EXPECT_EQ(maxmaxflow::maxmaxflow(merge_parallel(g)), maxmaxflow::maxmaxflow(g));
  }
}

TEST(Lambda, CycleIsMaxPlusMin) {
  const auto g = cycle_graph(5, {Rational(1, 2), 3, 2, Rational(7, 3), 1});
  EXPECT_EQ(maxmaxflow::maxmaxflow(g), Rational(7, 2));
}

TEST(Lambda, ForestIsMaxEdgeWeight) {
  const auto g = tree_from_parents({0, 0, 0, 1, 1}, {2, Rational(9, 2), 1, 3});
  EXPECT_EQ(maxmaxflow::maxmaxflow(g), Rational(9, 2));
}

TEST(Lambda, ThetaPiecewiseFormula) {
  // r = 3: 1 + w below 1/2, 3w on [1/2, 1], 2 + w above 1.
  EXPECT_EQ(maxmaxflow::maxmaxflow(theta_graph(3, Rational(1, 4))), Rational(5, 4));
  EXPECT_EQ(maxmaxflow::maxmaxflow(theta_graph(3, Rational(3, 4))), Rational(9, 4));
  EXPECT_EQ(maxmaxflow::maxmaxflow(theta_graph(3, Rational(2))), Rational(4));
}

TEST(Cocycles, TreeBasisHasFullRankAndCocyclesAreClosedUnderSum) {
  Rng rng(404);
  for (int t = 0; t < 60; ++t) {
    auto g = gen::multigraph(rng, 2, 7, 2);
    if (!is_connected(g)) continue;
    const auto tree = gomory_hu(g);
    const auto basis = cocycle_basis_from_tree(g, tree);
    ASSERT_EQ(basis.size(), static_cast<size_t>(g.vertex_count() - 1));
    Gf2Basis check(g.edge_count());
    for (const auto& c : basis) EXPECT_TRUE(check.insert(check.encode(c.edges)));
    EXPECT_EQ(check.rank(), g.vertex_count() - 1);

    // The sum of the cocycles of X1 and X2 is the cocycle of X1 Δ X2.
    const auto a = gen::subset(rng, g.vertex_count());
    const auto b = gen::subset(rng, g.vertex_count());
    const auto sym = set_union(set_difference(a, b), set_difference(b, a));
    EXPECT_EQ(symmetric_difference(cocycle_of(g, a).edges, cocycle_of(g, b).edges), cocycle_of(g, sym).edges);
  }
}

TEST(Cocycles, Gf2BasisRejectsDependentRows) {
  Gf2Basis basis(3);
  EXPECT_TRUE(basis.insert(basis.encode({0, 1})));
  EXPECT_TRUE(basis.insert(basis.encode({1, 2})));
  EXPECT_FALSE(basis.insert(basis.encode({0, 2})));
  EXPECT_FALSE(basis.insert(basis.encode({})));
  EXPECT_EQ(basis.rank(), 2);
}

TEST(CutPair, SidesAreDisjointSeparateXAndWeighAtMostLambda) {
  Rng rng(505);
  for (int t = 0; t < 120; ++t) {
    const auto g = gen::multigraph(rng, 2, 8, 3);
    VertexSet X = gen::subset(rng, g.vertex_count());
    if (X.size() < 2) X = {0, g.vertex_count() - 1};
    const auto cp = cut_pair(g, X);
    const Rational lambda = oracle::lambda(g);
    EXPECT_NE(cp.x1, cp.x2);
    EXPECT_EQ(set_intersection(X, cp.side1), VertexSet{cp.x1});
    EXPECT_EQ(set_intersection(X, cp.side2), VertexSet{cp.x2});
    EXPECT_TRUE(set_intersection(cp.side1, cp.side2).empty());
    EXPECT_EQ(cp.weight1, cocycle_of(g, cp.side1).weight);
    EXPECT_LE(cp.weight1, lambda);
    EXPECT_LE(cp.weight2, lambda);
  }
  EXPECT_THROW(cut_pair(path_graph(3), {0}), GraphError);
}
