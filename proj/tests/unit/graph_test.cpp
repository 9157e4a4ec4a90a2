#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "generators.hpp"
#include "maxmaxflow/generate.hpp"
#include "maxmaxflow/graph.hpp"
#include "oracles.hpp"

using namespace maxmaxflow;

namespace {

// Edges lying on some simple path between two members of X, by explicit path enumeration.
std::set<EdgeId> hull_edges_brute(const WeightedMultigraph& g, const EdgeSet& allowed, const VertexSet& X) {
  std::set<EdgeId> out;
  std::vector<bool> on(static_cast<size_t>(g.vertex_count()), false);
  std::vector<EdgeId> stack;
  std::function<void(Vertex, Vertex)> go = [&](Vertex v, Vertex start) {
    if (v != start && set_contains(X, v)) out.insert(stack.begin(), stack.end());
    for (auto id : g.incident(v)) {
      if (!std::binary_search(allowed.begin(), allowed.end(), id)) continue;
      const Vertex u = g.other(id, v);
      if (on[static_cast<size_t>(u)]) continue;
      on[static_cast<size_t>(u)] = true;
      stack.push_back(id);
      go(u, start);
      stack.pop_back();
      on[static_cast<size_t>(u)] = false;
    }
  };
  for (Vertex x : X) {
    on[static_cast<size_t>(x)] = true;
    go(x, x);
    on[static_cast<size_t>(x)] = false;
  }
  return out;
}

}  // namespace

TEST(Graph, ParseSerializeRoundTrip) {
  const auto g = parse_graph("# comment\nv 4\ne 1 2 1/2\ne 2 3 3\ne 1 2 0.25  # parallel\ne 3 4 0\n");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.edge(2).w, Rational(1, 4));
  EXPECT_EQ(weighted_degree(g, 0), Rational(3, 4));
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
}

TEST(Graph, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("v 2\ne 1 1 1\n"), 2);
  EXPECT_EQ(line_of("v 2\ne 1 3 1\n"), 2);
  EXPECT_EQ(line_of("v 2\n\ne 1 2 -1\n"), 3);
  EXPECT_EQ(line_of("e 1 2 1\n"), 1);
  EXPECT_EQ(line_of("v 2\nx\n"), 2);
  EXPECT_NE(line_of(""), -1);
}

TEST(Graph, VertexListsAreOneBasedAndSorted) {
  const auto g = path_graph(5);
  EXPECT_EQ(parse_vertex_list("3,1,2", g), (VertexSet{0, 1, 2}));
  EXPECT_EQ(format_vertex_list({0, 4}), "1,5");
  EXPECT_THROW(parse_vertex_list("6", g), std::exception);
  EXPECT_THROW(parse_vertex_list("0", g), std::exception);
}

TEST(Graph, SetOperations) {
  const VertexSet a{1, 3, 5}, b{3, 4};
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 3, 4, 5}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 5}));
  EXPECT_EQ(set_intersection(a, b), (VertexSet{3}));
  EXPECT_TRUE(is_subset({3}, a));
  EXPECT_FALSE(is_subset(b, a));
  EXPECT_EQ(make_set({5, 1, 5, 2}), (VertexSet{1, 2, 5}));
}

TEST(Graph, ComponentsAndDistance) {
  WeightedMultigraph g(5);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(3, 4, 1);
  int count = 0;
  const auto labels = component_labels(g, &count);
  EXPECT_EQ(count, 2);
  EXPECT_EQ(labels, (std::vector<int>{0, 0, 0, 1, 1}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(distance(g, 0, 2), 2);
  EXPECT_EQ(distance(g, 0, 3), -1);
  EXPECT_EQ(distance(g, 4, 4), 0);
}

TEST(Graph, TransformsPreserveWhatTheyShould) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto g = gen::multigraph(rng, 2, 7, 3);
    const auto merged = merge_parallel(g);
    EXPECT_EQ(weighted_degrees(merged), weighted_degrees(g));
    EXPECT_LE(merged.edge_count(), g.edge_count());
    const auto twice = scaled(g, 2);
    EXPECT_EQ(total_weight(twice), 2 * total_weight(g));
    const auto u = disjoint_union(g, g);
    EXPECT_EQ(u.vertex_count(), 2 * g.vertex_count());
    EXPECT_EQ(total_weight(u), 2 * total_weight(g));
    if (g.edge_count() > 0) {
      const auto minus = without_edge(g, 0);
      EXPECT_EQ(total_weight(minus) + g.edge(0).w, total_weight(g));
    }
  }
}

TEST(Graph, ExtractRenumbersInParentOrder) {
  const auto g = cycle_graph(5, {1, 2, 3, 4, 5});
  const auto h = Subgraph::spanned(g, {1, 2});
  EXPECT_EQ(h.vertices, (VertexSet{1, 2, 3}));
  const auto ex = extract(h);
  EXPECT_EQ(ex.graph.vertex_count(), 3);
  EXPECT_EQ(ex.original, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(total_weight(ex.graph), Rational(5));
  EXPECT_EQ(subgraph_weight(g, {1, 2}), Rational(6));
}

TEST(Graph, BlockDecompositionMatchesSeparationOracle) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto g = gen::multigraph(rng, 1, 7, 2);
    const auto bd = block_decomposition(g);
    VertexSet all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    EdgeSet edges;
    for (int e = 0; e < g.edge_count(); ++e) edges.push_back(e);
    const auto s = oracle::analyse(g, all, edges);

    std::multiset<std::pair<VertexSet, int>> mine, theirs;
    for (size_t b = 0; b < bd.blocks.size(); ++b) mine.emplace(bd.blocks[b].vertices, bd.cut_vertex_count(b));
    for (size_t b = 0; b < s.block_vertices.size(); ++b)
      theirs.emplace(make_set(s.block_vertices[b]), s.block_cuts[b]);
    EXPECT_EQ(mine, theirs) << serialize_graph(g);
    for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(bd.is_cut_vertex(v), s.cut[static_cast<size_t>(v)]);
    // Block-cut tree: one tree per component over the block and cut-vertex nodes.
    EXPECT_EQ(bd.tree_edges.size() + static_cast<size_t>(s.components), bd.blocks.size() + bd.cut_vertices.size());
  }
}

TEST(Graph, InteriorExcludesCutVertices) {
  // Two triangles sharing vertex 2, plus a pendant edge at 4.
  WeightedMultigraph g(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}})
    g.add_edge(u, v, 1);
  const auto bd = block_decomposition(g);
  EXPECT_EQ(bd.cut_vertices, (VertexSet{2, 4}));
  EXPECT_EQ(bd.blocks.size(), 3u);
  int ends = 0;
  for (size_t b = 0; b < bd.blocks.size(); ++b) {
    if (bd.is_end_block(b)) ++ends;
    for (Vertex v : bd.interior(b)) EXPECT_FALSE(bd.is_cut_vertex(v));
  }
  EXPECT_EQ(ends, 2);
}

TEST(Graph, ConvexHullMatchesPathEnumeration) {
  Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const auto g = gen::multigraph(rng, 2, 7, 2);
    const auto X = gen::nonempty_subset(rng, g.vertex_count());
    const auto whole = Subgraph::whole(g);
    const auto hull = convex_hull(whole, X);
    const auto brute = hull_edges_brute(g, whole.edges, X);
    EXPECT_EQ(std::set<EdgeId>(hull.edges.begin(), hull.edges.end()), brute) << serialize_graph(g);
    // Length-0 paths keep every member of X.
    EXPECT_TRUE(is_subset(X, hull.vertices));
  }
}
