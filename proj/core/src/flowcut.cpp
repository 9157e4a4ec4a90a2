#include "maxmaxflow/flowcut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace maxmaxflow {

namespace {

// Undirected network on integer capacities. Each undirected edge is a pair of
// opposite arcs of equal capacity; pushing along one frees the other.
template <class Cap>
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : first_(static_cast<size_t>(n), -1) {}

  void add_undirected(int a, int b, const Cap& c) {
    arc(a, b, c);
    arc(b, a, c);
  }

  // Shortest augmenting paths. Returns the flow value; `reach` marks the source side.
  Cap run(int s, int t, std::vector<char>& reach) {
    Cap total = 0;
    const size_t n = first_.size();
    std::vector<int> via(n);
    std::vector<int> queue;
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      reach.assign(n, 0);
      reach[static_cast<size_t>(s)] = 1;
      queue.assign(1, s);
      for (size_t i = 0; i < queue.size() && !reach[static_cast<size_t>(t)]; ++i) {
        const int a = queue[i];
        for (int k = first_[static_cast<size_t>(a)]; k != -1; k = arcs_[static_cast<size_t>(k)].next) {
          const Arc& ar = arcs_[static_cast<size_t>(k)];
          if (ar.residual > 0 && !reach[static_cast<size_t>(ar.to)]) {
            reach[static_cast<size_t>(ar.to)] = 1;
            via[static_cast<size_t>(ar.to)] = k;
            queue.push_back(ar.to);
          }
        }
      }
      if (!reach[static_cast<size_t>(t)]) return total;
      Cap push = arcs_[static_cast<size_t>(via[static_cast<size_t>(t)])].residual;
      for (int v = t; v != s; v = arcs_[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)].to)
        push = std::min<Cap>(push, arcs_[static_cast<size_t>(via[static_cast<size_t>(v)])].residual);
      for (int v = t; v != s; v = arcs_[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)].to) {
        const int k = via[static_cast<size_t>(v)];
        arcs_[static_cast<size_t>(k)].residual -= push;
        arcs_[static_cast<size_t>(k ^ 1)].residual += push;
      }
      total += push;
    }
  }

 private:
  struct Arc {
    int to;
    int next;
    Cap residual;
  };
  // Arcs 2i and 2i+1 are mutual reverses; their residuals start at c and c.
  void arc(int a, int b, const Cap& c) {
    arcs_.push_back({b, first_[static_cast<size_t>(a)], c});
    first_[static_cast<size_t>(a)] = static_cast<int>(arcs_.size()) - 1;
  }
  std::vector<int> first_;
  std::vector<Arc> arcs_;
};

// Integer capacities for every edge of g under one common denominator.
struct ScaledCapacities {
  Integer denominator;
  std::vector<Integer> cap;
  bool fits_int64 = true;
};

ScaledCapacities scale_capacities(const WeightedMultigraph& g) {
  ScaledCapacities sc;
  std::vector<Rational> ws;
  ws.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) ws.push_back(e.w);
  sc.denominator = common_denominator(ws);
  Integer sum = 0;
  for (const Rational& w : ws) {
    Integer c = w.get_num() * (sc.denominator / w.get_den());
    sum += c;
    sc.cap.push_back(c);
  }
  sc.fits_int64 = sum < Integer("4611686018427387904");  // 2^62: no overflow in residual sums
  return sc;
}

// Max flow between nodes s and t of a contracted copy of g, where node_of maps each vertex to
// a node in [0, nodes). Edges inside one node are dropped.
Rational contracted_flow(const WeightedMultigraph& g, const ScaledCapacities& sc, const std::vector<int>& node_of,
                         int nodes, int s, int t, std::vector<char>& reach) {
  if (sc.fits_int64) {
    FlowNetwork<std::int64_t> net(nodes);
    for (const Edge& e : g.edges()) {
      const int a = node_of[static_cast<size_t>(e.u)], b = node_of[static_cast<size_t>(e.v)];
      if (a != b) net.add_undirected(a, b, sc.cap[static_cast<size_t>(e.id)].get_si());
    }
    const std::int64_t f = net.run(s, t, reach);
    Rational out(Integer(static_cast<long>(f)), sc.denominator);
    out.canonicalize();
    return out;
  }
  FlowNetwork<Integer> net(nodes);
  for (const Edge& e : g.edges()) {
    const int a = node_of[static_cast<size_t>(e.u)], b = node_of[static_cast<size_t>(e.v)];
    if (a != b) net.add_undirected(a, b, sc.cap[static_cast<size_t>(e.id)]);
  }
  const Integer f = net.run(s, t, reach);
  Rational out(f, sc.denominator);
  out.canonicalize();
  return out;
}

std::vector<std::vector<std::pair<int, size_t>>> tree_adjacency(const GomoryHuTree& t) {
  std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(t.n));
  for (size_t i = 0; i < t.edges.size(); ++i) {
    adj[static_cast<size_t>(t.edges[i].u)].push_back({t.edges[i].v, i});
    adj[static_cast<size_t>(t.edges[i].v)].push_back({t.edges[i].u, i});
  }
  return adj;
}

void require_tree(const WeightedMultigraph& g, const GomoryHuTree& t) {
  const int n = g.vertex_count();
  if (t.n != n) throw GraphError("tree vertex set differs from V(G)");
  if (n > 0 && static_cast<int>(t.edges.size()) != n - 1) throw GraphError("not a tree: wrong edge count");
  WeightedMultigraph tg(n);
  for (const auto& e : t.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) throw GraphError("not a tree: bad edge");
    tg.add_edge(e.u, e.v, e.w);
  }
  if (!is_connected(tg)) throw GraphError("not a tree: disconnected");
}

// Vertices on the u-side of T - e.
std::vector<char> side_of_tree_edge(const GomoryHuTree& t, size_t index) {
  auto adj = tree_adjacency(t);
  std::vector<char> in(static_cast<size_t>(t.n), 0);
  std::vector<int> stack{t.edges[index].u};
  in[static_cast<size_t>(t.edges[index].u)] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (auto [b, i] : adj[static_cast<size_t>(a)]) {
      if (i == index || in[static_cast<size_t>(b)]) continue;
      in[static_cast<size_t>(b)] = 1;
      stack.push_back(b);
    }
  }
  return in;
}

}  // namespace

MinCutCertificate max_flow(const WeightedMultigraph& g, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw GraphError("max_flow needs distinct vertices");
  const ScaledCapacities sc = scale_capacities(g);
  std::vector<int> node_of(static_cast<size_t>(g.vertex_count()));
  std::iota(node_of.begin(), node_of.end(), 0);
  std::vector<char> reach;
  MinCutCertificate cert;
  cert.value = contracted_flow(g, sc, node_of, g.vertex_count(), x, y, reach);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (reach[static_cast<size_t>(v)]) cert.side.push_back(v);
  for (const Edge& e : g.edges())
    if (reach[static_cast<size_t>(e.u)] != reach[static_cast<size_t>(e.v)]) cert.cut_edges.push_back(e.id);
  return cert;
}

GomoryHuTree gomory_hu(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  GomoryHuTree out;
  out.n = n;
  if (n <= 1) return out;
  const ScaledCapacities sc = scale_capacities(g);

  struct SuperEdge {
    int a, b;
    Rational w;
  };
  std::vector<std::vector<Vertex>> super{{}};
  for (Vertex v = 0; v < n; ++v) super[0].push_back(v);
  std::vector<SuperEdge> tedges;

  std::vector<int> node_of(static_cast<size_t>(n));
  std::vector<char> reach;
  while (true) {
    int si = -1;
    for (size_t i = 0; i < super.size(); ++i)
      if (super[i].size() >= 2) {
        si = static_cast<int>(i);
        break;
      }
    if (si < 0) break;
    const std::vector<Vertex> S = super[static_cast<size_t>(si)];

    // Contract each subtree hanging off S into one node.
    std::vector<int> super_node(super.size(), -1);
    std::vector<size_t> hang_edge;  // tree edge index leading to each contracted subtree
    int nodes = static_cast<int>(S.size());
    std::vector<std::vector<std::pair<int, size_t>>> sadj(super.size());
    for (size_t i = 0; i < tedges.size(); ++i) {
      sadj[static_cast<size_t>(tedges[i].a)].push_back({tedges[i].b, i});
      sadj[static_cast<size_t>(tedges[i].b)].push_back({tedges[i].a, i});
    }
    for (auto [nb, i] : sadj[static_cast<size_t>(si)]) {
      const int id = nodes++;
      hang_edge.push_back(i);
      std::vector<int> stack{nb};
      super_node[static_cast<size_t>(nb)] = id;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (auto [b, j] : sadj[static_cast<size_t>(a)]) {
          (void)j;
          if (b == si || super_node[static_cast<size_t>(b)] != -1) continue;
          super_node[static_cast<size_t>(b)] = id;
          stack.push_back(b);
        }
      }
    }
    for (size_t i = 0; i < super.size(); ++i) {
      if (static_cast<int>(i) == si) continue;
      for (Vertex v : super[i]) node_of[static_cast<size_t>(v)] = super_node[i];
    }
    for (size_t i = 0; i < S.size(); ++i) node_of[static_cast<size_t>(S[i])] = static_cast<int>(i);

    const Rational value = contracted_flow(g, sc, node_of, nodes, 0, 1, reach);

    std::vector<Vertex> sa, sb;
    for (size_t i = 0; i < S.size(); ++i) (reach[i] ? sa : sb).push_back(S[i]);
    super[static_cast<size_t>(si)] = sa;
    const int bi = static_cast<int>(super.size());
    super.push_back(sb);
    for (size_t j = 0; j < hang_edge.size(); ++j) {
      if (reach[S.size() + j]) continue;
      SuperEdge& te = tedges[hang_edge[j]];
      (te.a == si ? te.a : te.b) = bi;
    }
    tedges.push_back({si, bi, value});
  }
  for (const auto& te : tedges)
    out.edges.push_back({super[static_cast<size_t>(te.a)][0], super[static_cast<size_t>(te.b)][0], te.w});
  return out;
}

Rational tree_path_bottleneck(const GomoryHuTree& t, Vertex x, Vertex y) {
  if (x == y) throw GraphError("bottleneck needs distinct vertices");
  auto adj = tree_adjacency(t);
  std::vector<int> via(static_cast<size_t>(t.n), -1);
  std::vector<char> seen(static_cast<size_t>(t.n), 0);
  std::vector<int> queue{x};
  seen[static_cast<size_t>(x)] = 1;
  for (size_t i = 0; i < queue.size(); ++i)
    for (auto [b, k] : adj[static_cast<size_t>(queue[i])])
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = 1;
        via[static_cast<size_t>(b)] = static_cast<int>(k);
        queue.push_back(b);
      }
  if (!seen[static_cast<size_t>(y)]) throw GraphError("tree is disconnected");
  Rational best = -1;
  for (int v = y; v != x;) {
    const TreeEdge& e = t.edges[static_cast<size_t>(via[static_cast<size_t>(v)])];
    if (best < 0 || e.w < best) best = e.w;
    v = e.u == v ? e.v : e.u;
  }
  return best;
}

WeightedMultigraph tree_as_graph(const GomoryHuTree& t) {
  WeightedMultigraph out(t.n);
  for (const auto& e : t.edges) out.add_edge(e.u, e.v, e.w);
  return out;
}

Rational maxmaxflow(const WeightedMultigraph& g) {
  if (g.vertex_count() < 2) throw GraphError("maxmaxflow is undefined for fewer than 2 vertices");
  Rational best = 0;
  for (const auto& e : gomory_hu(g).edges) best = std::max(best, e.w);
  return best;
}

Rational maxmaxflow_blockwise(const WeightedMultigraph& g) {
  if (g.vertex_count() < 2) throw GraphError("maxmaxflow is undefined for fewer than 2 vertices");
  Rational best = 0;
  for (const Block& b : block_decomposition(g).blocks) {
    if (b.vertices.size() < 2) continue;
    Subgraph h;
    h.parent = &g;
    h.vertices = b.vertices;
    h.edges = b.edges;
    best = std::max(best, maxmaxflow(extract(h).graph));
  }
  return best;
}

Cocycle cocycle_of(const WeightedMultigraph& g, const VertexSet& side) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : side) {
    g.require_vertex(v);
    in[static_cast<size_t>(v)] = 1;
  }
  Cocycle c;
  c.side = side;
  c.weight = 0;
  for (const Edge& e : g.edges())
    if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)]) {
      c.edges.push_back(e.id);
      c.weight += e.w;
    }
  return c;
}

Cocycle elementary_cocycle(const WeightedMultigraph& g, const GomoryHuTree& t, size_t index) {
  require_tree(g, t);
  if (index >= t.edges.size()) throw GraphError("tree edge index out of range");
  const auto in = side_of_tree_edge(t, index);
  VertexSet side;
  for (Vertex v = 0; v < t.n; ++v)
    if (in[static_cast<size_t>(v)]) side.push_back(v);
  return cocycle_of(g, side);
}

std::vector<Cocycle> cocycle_basis_from_tree(const WeightedMultigraph& g, const GomoryHuTree& t) {
  if (!is_connected(g)) throw GraphError("cocycle basis needs a connected graph; split by component");
  require_tree(g, t);
  std::vector<Cocycle> out;
  Gf2Basis basis(g.edge_count());
  for (size_t i = 0; i < t.edges.size(); ++i) {
    out.push_back(elementary_cocycle(g, t, i));
    if (!basis.insert(basis.encode(out.back().edges)))
      throw std::logic_error("elementary cocycles are GF(2)-dependent");
  }
  return out;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> Gf2Basis::encode(const EdgeSet& edges) const {
  std::vector<std::uint64_t> v(words_, 0);
  for (EdgeId e : edges) v[static_cast<size_t>(e) / 64] |= std::uint64_t{1} << (static_cast<unsigned>(e) % 64);
  return v;
}

bool Gf2Basis::insert(std::vector<std::uint64_t> v) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if ((v[static_cast<size_t>(p) / 64] >> (p % 64)) & 1U)
      for (size_t w = 0; w < words_; ++w) v[w] ^= rows_[r][w];
  }
  for (size_t w = 0; w < words_; ++w) {
    if (v[w] == 0) continue;
    pivots_.push_back(static_cast<int>(w * 64 + static_cast<size_t>(__builtin_ctzll(v[w]))));
    rows_.push_back(std::move(v));
    return true;
  }
  return false;
}

Rational lambda_tilde_bruteforce(const WeightedMultigraph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw GraphError("lambda_tilde_bruteforce: " + std::to_string(n) + " vertices exceeds cap " +
                                std::to_string(cap));
  if (n < 2) throw GraphError("maxmaxflow is undefined for fewer than 2 vertices");
  int ncomp = 0;
  const auto label = component_labels(g, &ncomp);
  Rational best = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (label[static_cast<size_t>(v)] == c) members.push_back(v);
    const int k = static_cast<int>(members.size());
    if (k < 2) continue;
    // X always contains members[0]; the free bits choose the rest of X.
    struct Candidate {
      Rational weight;
      std::uint32_t mask;
      EdgeSet edges;
    };
    std::vector<Candidate> cands;
    const std::uint32_t limit = std::uint32_t{1} << (k - 1);
    std::vector<char> in(static_cast<size_t>(n));
    for (std::uint32_t mask = 0; mask + 1 < limit; ++mask) {
      std::fill(in.begin(), in.end(), 0);
      in[static_cast<size_t>(members[0])] = 1;
      for (int i = 1; i < k; ++i)
        if ((mask >> (i - 1)) & 1U) in[static_cast<size_t>(members[static_cast<size_t>(i)])] = 1;
      Candidate cd{0, mask, {}};
      for (const Edge& e : g.edges())
        if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)] && label[static_cast<size_t>(e.u)] == c) {
          cd.edges.push_back(e.id);
          cd.weight += e.w;
        }
      cands.push_back(std::move(cd));
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.weight != b.weight) return a.weight < b.weight;
      return a.mask < b.mask;
    });
    Gf2Basis basis(g.edge_count());
    Rational used = 0;
    for (const auto& cd : cands) {
      if (basis.insert(basis.encode(cd.edges))) used = cd.weight;
      if (basis.rank() == k - 1) break;
    }
    if (basis.rank() != k - 1) throw std::logic_error("cocycle space rank deficient");
    best = std::max(best, used);
  }
  return best;
}

CutPair cut_pair(const WeightedMultigraph& g, const VertexSet& x) {
  if (x.size() < 2) throw GraphError("cut_pair needs |X| >= 2");
  for (Vertex v : x) g.require_vertex(v);
  const GomoryHuTree t = gomory_hu(g);
  auto adj = tree_adjacency(t);
  const size_t n = static_cast<size_t>(t.n);

  // T' = union of tree paths between members of X, by pruning non-X leaves.
  std::vector<char> alive(n, 1), terminal(n, 0);
  std::vector<int> degree(n);
  for (Vertex v : x) terminal[static_cast<size_t>(v)] = 1;
  for (size_t v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<int> queue;
  for (size_t v = 0; v < n; ++v)
    if (!terminal[v] && degree[v] <= 1) queue.push_back(static_cast<int>(v));
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[static_cast<size_t>(v)]) continue;
    alive[static_cast<size_t>(v)] = 0;
    for (auto [b, k] : adj[static_cast<size_t>(v)]) {
      (void)k;
      if (alive[static_cast<size_t>(b)] && --degree[static_cast<size_t>(b)] <= 1 && !terminal[static_cast<size_t>(b)])
        queue.push_back(b);
    }
  }
  std::vector<std::pair<Vertex, size_t>> leaves;  // end vertex of T' with its T' edge
  for (Vertex v : x) {
    int live = 0;
    size_t edge = 0;
    for (auto [b, k] : adj[static_cast<size_t>(v)])
      if (alive[static_cast<size_t>(b)]) {
        ++live;
        edge = k;
      }
    if (live == 1) leaves.push_back({v, edge});
  }
  if (leaves.size() < 2) throw std::logic_error("Steiner subtree has fewer than two end vertices");

  CutPair out;
  auto side_at = [&](Vertex leaf, size_t k) {
    auto in = side_of_tree_edge(t, k);
    const bool flip = !in[static_cast<size_t>(leaf)];
    VertexSet s;
    for (size_t v = 0; v < n; ++v)
      if (static_cast<bool>(in[v]) != flip) s.push_back(static_cast<Vertex>(v));
    return s;
  };
  out.x1 = leaves[0].first;
  out.x2 = leaves[1].first;
  out.side1 = side_at(out.x1, leaves[0].second);
  out.side2 = side_at(out.x2, leaves[1].second);
  out.weight1 = cocycle_of(g, out.side1).weight;
  out.weight2 = cocycle_of(g, out.side2).weight;
  return out;
}

}  // namespace maxmaxflow
