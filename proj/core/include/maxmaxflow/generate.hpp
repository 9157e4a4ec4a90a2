#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxmaxflow/graph.hpp"
#include "maxmaxflow/rng.hpp"

namespace maxmaxflow {

// Path on n vertices 1-2-...-n; `weights` has n-1 entries, or is empty for unit weights.
WeightedMultigraph path_graph(int n, const std::vector<Rational>& weights = {});
WeightedMultigraph cycle_graph(int n, const std::vector<Rational>& weights = {});
// Center is vertex 0.
WeightedMultigraph star_graph(int r, const Rational& w = 1);
// K1 + C_r: hub is vertex 0, rim 1..r.
WeightedMultigraph wheel_graph(int r, const Rational& w = 1);
WeightedMultigraph complete_graph(int n, const Rational& w = 1);
// Tree from a parent array: parent[i] < i for i >= 1, parent[0] ignored.
WeightedMultigraph tree_from_parents(const std::vector<int>& parent, const std::vector<Rational>& weights = {});
// Θ_{1,2,...,r}: a = 0, b = 1, internally disjoint a-b paths of lengths 1..r.
// On each path the edge at a carries weight w, the others weight 1.
WeightedMultigraph theta_graph(int r, const Rational& w);
// K2^(s) with every edge weight delta/s.
WeightedMultigraph k2s_graph(int s, const Rational& delta);
// Each edge replaced by s parallel edges of weight w_e / s (the maxmaxflow is unchanged).
WeightedMultigraph parallelize(const WeightedMultigraph& g, int s);
// Complete r-regular tree truncated at the given depth (root degree r, inner vertices degree r).
WeightedMultigraph truncated_regular_tree(int r, int depth, const Rational& w = 1);
// k disjoint copies of K_{1,r}^(s), edge weights lambda/s; centers are 0, r+1, 2(r+1), ...
WeightedMultigraph disjoint_parallel_stars(int k, int r, int s, const Rational& lambda = 1);

struct RandomGraphConfig {
  int min_vertices = 2;
  int max_vertices = 8;
  // Probability that a vertex pair is joined, as num/den.
  std::uint64_t edge_num = 1;
  std::uint64_t edge_den = 2;
  int max_multiplicity = 1;
  // Weights are drawn uniformly from this list.
  std::vector<Rational> weights{Rational(1)};
  // If positive, pairs are added only while the edge count stays at or below this.
  int max_edges = 0;
};

WeightedMultigraph random_graph(const RandomGraphConfig& cfg, Rng& rng);
WeightedMultigraph random_tree(int n, const std::vector<Rational>& weights, Rng& rng);
// A few random blocks glued at random cut vertices.
WeightedMultigraph random_separable_graph(int blocks, int max_block_size, const std::vector<Rational>& weights,
                                          Rng& rng);

// Named-family entry point for the CLI: "path", "cycle", "star", "wheel", "complete",
// "tree", "theta", "k2s", "parallel-path", "parallel-tree", "regular-tree", "stars", "random".
struct FamilySpec {
  std::string family;
  int n = 0;
  int r = 0;
  int s = 1;
  int k = 1;
  int depth = 0;
  Rational w = 1;
  std::vector<Rational> weights;
  std::uint64_t seed = 0;
  RandomGraphConfig random;
};

WeightedMultigraph generate(const FamilySpec& spec);

}  // namespace maxmaxflow
