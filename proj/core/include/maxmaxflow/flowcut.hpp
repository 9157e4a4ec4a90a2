#pragma once

#include <cstdint>
#include <vector>

#include "maxmaxflow/graph.hpp"

namespace maxmaxflow {

struct MinCutCertificate {
  Rational value;
  VertexSet side;  // contains the source, not the sink
  EdgeSet cut_edges;
};

// λ_G(x,y;w) with the residual-reachable source side as certificate.
// Vertices in different components give value 0 and side = the source's component.
MinCutCertificate max_flow(const WeightedMultigraph& g, Vertex x, Vertex y);

struct TreeEdge {
  Vertex u;
  Vertex v;
  Rational w;
};

// A spanning tree of V(G). Different components are joined by weight-0 edges,
// which keeps property (a) (cross-component flow is 0) and property (b)
// (the induced cut separates components and is empty).
struct GomoryHuTree {
  int n = 0;
  std::vector<TreeEdge> edges;
};

GomoryHuTree gomory_hu(const WeightedMultigraph& g);

// Minimum edge weight on the tree path x..y.
Rational tree_path_bottleneck(const GomoryHuTree& t, Vertex x, Vertex y);
// The tree as a graph in the same text format (vertex ids shared with G).
WeightedMultigraph tree_as_graph(const GomoryHuTree& t);

// Λ(G,w); throws GraphError when |V| < 2.
Rational maxmaxflow(const WeightedMultigraph& g);
// Same value, computed block by block.
Rational maxmaxflow_blockwise(const WeightedMultigraph& g);

struct Cocycle {
  VertexSet side;  // X; the complement is implicit
  EdgeSet edges;   // E(X, X^c)
  Rational weight;
};

Cocycle cocycle_of(const WeightedMultigraph& g, const VertexSet& side);
// The cocycle given by the two components of T - e, where e = t.edges[index]; X contains its first endpoint.
Cocycle elementary_cocycle(const WeightedMultigraph& g, const GomoryHuTree& t, size_t index);
// All n-1 elementary cocycles of T; G must be connected. Throws if they are not GF(2)-independent.
std::vector<Cocycle> cocycle_basis_from_tree(const WeightedMultigraph& g, const GomoryHuTree& t);
// Symmetric difference of edge sets.
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

// Incremental GF(2) row reduction over edge-indexed bit vectors.
class Gf2Basis {
 public:
  explicit Gf2Basis(int bits) : words_((static_cast<size_t>(bits) + 63) / 64) {}
  // Adds v if independent of the rows so far; returns whether it was added.
  bool insert(std::vector<std::uint64_t> v);
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<std::uint64_t> encode(const EdgeSet& edges) const;

 private:
  size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> pivots_;
};

inline constexpr int kLambdaTildeDefaultCap = 12;

// Λ̃ by matroid greedy over all cocycles; no flow computation involved.
Rational lambda_tilde_bruteforce(const WeightedMultigraph& g, int cap = kLambdaTildeDefaultCap);

struct CutPair {
  Vertex x1, x2;
  VertexSet side1, side2;
  Rational weight1, weight2;
};

// The two leaf cuts of the Gomory–Hu Steiner subtree spanned by X.
CutPair cut_pair(const WeightedMultigraph& g, const VertexSet& x);

}  // namespace maxmaxflow
