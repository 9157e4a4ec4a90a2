#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxmaxflow/rational.hpp"

namespace maxmaxflow {

// Vertices are 0-based indices internally; files and CLI output use index + 1.
using Vertex = int;
using EdgeId = int;
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate-free
using EdgeSet = std::vector<EdgeId>;    // kept sorted and duplicate-free

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;
  Rational w;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Loopless multigraph with exact nonnegative weights. Parallel edges stay
// distinct; edge ids are assigned densely in insertion order.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(int n) : incident_(static_cast<size_t>(n)) {}

  Vertex add_vertex();
  EdgeId add_edge(Vertex u, Vertex v, Rational w);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }
  const std::vector<EdgeId>& incident(Vertex x) const { return incident_.at(static_cast<size_t>(x)); }
  Vertex other(EdgeId e, Vertex x) const {
    const Edge& ed = edge(e);
    return ed.u == x ? ed.v : ed.u;
  }
  bool has_vertex(Vertex x) const { return x >= 0 && x < vertex_count(); }
  void require_vertex(Vertex x) const;

  friend bool operator==(const WeightedMultigraph& a, const WeightedMultigraph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// H ⊆ G by vertex and edge ids of the parent.
struct Subgraph {
  const WeightedMultigraph* parent = nullptr;
  VertexSet vertices;
  EdgeSet edges;

  static Subgraph whole(const WeightedMultigraph& g);
  // Vertex set = endpoints of the edges plus the extra vertices.
  static Subgraph spanned(const WeightedMultigraph& g, EdgeSet edges, const VertexSet& extra = {});
  static Subgraph induced(const WeightedMultigraph& g, const VertexSet& vertices);

  bool contains_vertex(Vertex x) const;
  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.parent == b.parent && a.vertices == b.vertices && a.edges == b.edges;
  }
};

// Product of the edge weights (1 for no edges).
Rational subgraph_weight(const WeightedMultigraph& g, const EdgeSet& edges);

// Standalone copy of H with vertices renumbered 0..|V(H)|-1 in increasing parent order.
// `original` maps new index -> parent vertex.
struct ExtractedGraph {
  WeightedMultigraph graph;
  std::vector<Vertex> original;
  std::vector<EdgeId> original_edge;
};
ExtractedGraph extract(const Subgraph& h);

WeightedMultigraph without_edge(const WeightedMultigraph& g, EdgeId e);
// Explicit parallel-edge reduction: parallel edges merged into one edge of summed weight.
WeightedMultigraph merge_parallel(const WeightedMultigraph& g);
WeightedMultigraph scaled(const WeightedMultigraph& g, const Rational& c);
WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b);

Rational weighted_degree(const WeightedMultigraph& g, Vertex x);
std::vector<Rational> weighted_degrees(const WeightedMultigraph& g);
Rational total_weight(const WeightedMultigraph& g);

// Connected components as a label per vertex (labels 0.. in order of least vertex).
std::vector<int> component_labels(const WeightedMultigraph& g, int* count = nullptr);
bool is_connected(const WeightedMultigraph& g);
// Unweighted shortest-path length, or -1 if unreachable.
int distance(const WeightedMultigraph& g, Vertex x, Vertex y);

struct Block {
  VertexSet vertices;
  EdgeSet edges;  // empty for an isolated vertex
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet cut_vertices;
  // Block-cut tree: node i < blocks.size() is block i; node blocks.size() + j is cut_vertices[j].
  std::vector<std::pair<int, int>> tree_edges;

  bool is_cut_vertex(Vertex x) const;
  int cut_vertex_count(size_t block) const;
  bool is_end_block(size_t block) const { return cut_vertex_count(block) == 1; }
  bool is_isolated_block(size_t block) const { return cut_vertex_count(block) == 0; }
  // Int(B,H): vertices of the block that are not cut vertices of H.
  VertexSet interior(size_t block) const;
};

BlockDecomposition block_decomposition(const Subgraph& h);
BlockDecomposition block_decomposition(const WeightedMultigraph& g);

// conv(X,H): union of all paths in H joining members of X, including length-0 paths.
Subgraph convex_hull(const Subgraph& h, const VertexSet& x);

WeightedMultigraph parse_graph(std::istream& in);
WeightedMultigraph parse_graph(std::string_view text);
WeightedMultigraph read_graph_file(const std::string& path);
std::string serialize_graph(const WeightedMultigraph& g);

// "3,1,2" (1-based) -> sorted internal set; validates membership.
VertexSet parse_vertex_list(std::string_view text, const WeightedMultigraph& g);
std::string format_vertex_list(const VertexSet& s);

VertexSet make_set(std::vector<Vertex> v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex x);
bool is_subset(const VertexSet& a, const VertexSet& b);

namespace detail {

// Block structure of a small local multigraph given as endpoint pairs over
// vertices 0..n-1. Reuses its buffers across calls.
class LocalBlocks {
 public:
  void run(int n, const std::vector<std::pair<int, int>>& edges);

  int block_count() const { return static_cast<int>(block_vertices_.size()); }
  const std::vector<int>& block_of_edge() const { return block_of_edge_; }
  const std::vector<int>& vertices_of(int b) const { return block_vertices_[static_cast<size_t>(b)]; }
  // Number of blocks containing each vertex; a cut vertex lies in two or more.
  const std::vector<int>& membership() const { return membership_; }
  bool is_cut(int v) const { return membership_[static_cast<size_t>(v)] >= 2; }
  int cut_count(int b) const;

 private:
  std::vector<int> block_of_edge_;
  std::vector<std::vector<int>> block_vertices_;
  std::vector<int> membership_;
  std::vector<int> disc_, low_, adj_start_, adj_, edge_stack_, mark_;
  struct Frame {
    int v, parent_edge, next;
  };
  std::vector<Frame> frames_;
};

}  // namespace detail

}  // namespace maxmaxflow
