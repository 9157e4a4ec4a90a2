#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "maxmaxflow/chromatic.hpp"
#include "maxmaxflow/generate.hpp"
#include "maxmaxflow/invariants.hpp"
#include "oracles.hpp"

using namespace maxmaxflow;

TEST(Chromatic, ValuesMatchBruteForceColourings) {
  Rng rng(71);
  for (int t = 0; t < 80; ++t) {
    const auto g = gen::multigraph(rng, 1, 8, 3);
    const auto p = chromatic_polynomial(g);
    EXPECT_EQ(p.degree(), g.vertex_count());
    for (int q = 0; q <= 4; ++q) EXPECT_EQ(p.evaluate(q), oracle::colourings(g, q)) << serialize_graph(g);
  }
}

TEST(Chromatic, SmallGraphsAreDeterminedByInterpolationPoints) {
  // n + 1 values fix a degree-n polynomial, so agreement at q = 0..n pins every coefficient.
  Rng rng(72);
  for (int t = 0; t < 40; ++t) {
    const auto g = gen::multigraph(rng, 1, 6, 2);
    const auto p = chromatic_polynomial(g);
    for (int q = 0; q <= g.vertex_count(); ++q) EXPECT_EQ(p.evaluate(q), oracle::colourings(g, q));
  }
}

TEST(Chromatic, KnownFamilies) {
  EXPECT_EQ(chromatic_polynomial(complete_graph(4)).str(), "q^4 - 6q^3 + 11q^2 - 6q");
  // Trees: q (q - 1)^(n - 1).
  EXPECT_EQ(chromatic_polynomial(path_graph(4)).str(), "q^4 - 3q^3 + 3q^2 - q");
  // C_5: (q - 1)^5 - (q - 1).
  EXPECT_EQ(chromatic_polynomial(cycle_graph(5)).str(), "q^5 - 5q^4 + 10q^3 - 10q^2 + 4q");
  // Parallel edges and weights do not matter.
  EXPECT_EQ(chromatic_polynomial(parallelize(cycle_graph(5), 3)), chromatic_polynomial(cycle_graph(5)));
  EXPECT_EQ(chromatic_polynomial(theta_graph(3, Rational(1, 2))).str(), "q^5 - 6q^4 + 14q^3 - 15q^2 + 6q");
  EXPECT_THROW(chromatic_polynomial(complete_graph(15)), std::invalid_argument);
}

TEST(Chromatic, IntegerRootsLieBetweenZeroAndDegeneracy) {
  Rng rng(73);
  for (int t = 0; t < 80; ++t) {
    const auto g = gen::multigraph(rng, 2, 9, 2);
    const auto p = chromatic_polynomial(g);
    const auto roots = chromatic_roots(p);
    // Unit weights make D the ordinary degeneracy of the simple graph.
    WeightedMultigraph unit(g.vertex_count());
    const auto simple = merge_parallel(g);
    for (const auto& e : simple.edges()) unit.add_edge(e.u, e.v, 1);
    const Rational D = degeneracy(unit);
    for (const auto& r : roots.integer_roots) {
      EXPECT_GE(r, 0);
      EXPECT_LE(Rational(r), D) << serialize_graph(g);
      EXPECT_EQ(p.evaluate(r), 0);
    }
    EXPECT_EQ(roots.roots.size(), static_cast<size_t>(p.degree()));
    EXPECT_LE(roots.residual, kRootResidualTolerance);
    for (const auto& z : roots.roots) EXPECT_LE(std::abs(z), roots.max_abs + 1e-12L);
  }
}

TEST(Chromatic, ThetaRoots) {
  const auto roots = chromatic_roots(chromatic_polynomial(theta_graph(3, Rational(1))));
  EXPECT_EQ(roots.integer_roots, (std::vector<Integer>{0, 1, 2}));
  // The remaining factor q^2 - 3q + 3 has roots 3/2 ± i sqrt(3)/2, of modulus sqrt(3) < 2.
  EXPECT_NEAR(static_cast<double>(roots.max_abs), 2.0, 1e-9);
  int complex_roots = 0;
  for (const auto& z : roots.roots)
    if (std::abs(z.imag()) > 1e-6L) {
      ++complex_roots;
      EXPECT_NEAR(static_cast<double>(std::abs(z)), std::sqrt(3.0), 1e-9);
    }
  EXPECT_EQ(complex_roots, 2);
}

TEST(Chromatic, ExplorerIsDeterministicAndSummarisesBuckets) {
  ExploreConfig cfg;
  cfg.trials = 60;
  cfg.seed = 4;
  cfg.max_vertices = 9;
  const auto a = explore_conjecture8(cfg);
  cfg.jobs = 3;
  const auto b = explore_conjecture8(cfg);
  ASSERT_EQ(a.records.size(), 60u);
  ASSERT_EQ(b.records.size(), 60u);
  for (size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].trial, static_cast<long>(i));
    EXPECT_EQ(a.records[i].graph, b.records[i].graph);
    EXPECT_EQ(a.records[i].max_abs_root, b.records[i].max_abs_root);
    EXPECT_EQ(a.records[i].polynomial, chromatic_polynomial(a.records[i].graph));
  }
  long total = 0;
  for (size_t i = 0; i < a.buckets.size(); ++i) {
    if (i > 0) {
      EXPECT_LT(a.buckets[i - 1].Lambda, a.buckets[i].Lambda);
    }
    total += a.buckets[i].count;
    const auto& best = a.records[static_cast<size_t>(a.buckets[i].best_trial)];
    EXPECT_EQ(best.Lambda, a.buckets[i].Lambda);
  }
  EXPECT_EQ(total, 60);
}
