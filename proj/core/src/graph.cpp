#include "maxmaxflow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace maxmaxflow {

Vertex WeightedMultigraph::add_vertex() {
  incident_.emplace_back();
  return vertex_count() - 1;
}

EdgeId WeightedMultigraph::add_edge(Vertex u, Vertex v, Rational w) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u + 1));
  w.canonicalize();
  if (w < 0) throw GraphError("negative weight " + to_string(w));
  const EdgeId id = edge_count();
  edges_.push_back(Edge{id, u, v, std::move(w)});
  incident_[static_cast<size_t>(u)].push_back(id);
  incident_[static_cast<size_t>(v)].push_back(id);
  return id;
}

void WeightedMultigraph::require_vertex(Vertex x) const {
  if (!has_vertex(x)) throw GraphError("unknown vertex " + std::to_string(x + 1));
}

bool operator==(const WeightedMultigraph& a, const WeightedMultigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    const Edge &x = a.edge(e), &y = b.edge(e);
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

// ---------------------------------------------------------------- sets

VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------- subgraphs

Subgraph Subgraph::whole(const WeightedMultigraph& g) {
  Subgraph h;
  h.parent = &g;
  h.vertices.resize(static_cast<size_t>(g.vertex_count()));
  for (Vertex x = 0; x < g.vertex_count(); ++x) h.vertices[static_cast<size_t>(x)] = x;
  h.edges.resize(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) h.edges[static_cast<size_t>(e)] = e;
  return h;
}

Subgraph Subgraph::spanned(const WeightedMultigraph& g, EdgeSet edges, const VertexSet& extra) {
  Subgraph h;
  h.parent = &g;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Vertex> vs(extra.begin(), extra.end());
  for (EdgeId e : edges) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  for (Vertex x : vs) g.require_vertex(x);
  h.vertices = make_set(std::move(vs));
  h.edges = std::move(edges);
  return h;
}

Subgraph Subgraph::induced(const WeightedMultigraph& g, const VertexSet& vertices) {
  Subgraph h;
  h.parent = &g;
  h.vertices = vertices;
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex x : vertices) {
    g.require_vertex(x);
    in[static_cast<size_t>(x)] = 1;
  }
  for (const Edge& e : g.edges())
    if (in[static_cast<size_t>(e.u)] && in[static_cast<size_t>(e.v)]) h.edges.push_back(e.id);
  return h;
}

bool Subgraph::contains_vertex(Vertex x) const { return set_contains(vertices, x); }

Rational subgraph_weight(const WeightedMultigraph& g, const EdgeSet& edges) {
  Rational w = 1;
  for (EdgeId e : edges) w *= g.edge(e).w;
  return w;
}

ExtractedGraph extract(const Subgraph& h) {
  ExtractedGraph out;
  out.graph = WeightedMultigraph(static_cast<int>(h.vertices.size()));
  out.original = h.vertices;
  std::map<Vertex, int> index;
  for (size_t i = 0; i < h.vertices.size(); ++i) index[h.vertices[i]] = static_cast<int>(i);
  for (EdgeId e : h.edges) {
    const Edge& ed = h.parent->edge(e);
    out.graph.add_edge(index.at(ed.u), index.at(ed.v), ed.w);
    out.original_edge.push_back(e);
  }
  return out;
}

WeightedMultigraph without_edge(const WeightedMultigraph& g, EdgeId removed) {
  WeightedMultigraph out(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.id != removed) out.add_edge(e.u, e.v, e.w);
  return out;
}

WeightedMultigraph merge_parallel(const WeightedMultigraph& g) {
  std::map<std::pair<Vertex, Vertex>, Rational> merged;
  for (const Edge& e : g.edges()) merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  WeightedMultigraph out(g.vertex_count());
  for (const auto& [key, w] : merged) out.add_edge(key.first, key.second, w);
  return out;
}

WeightedMultigraph scaled(const WeightedMultigraph& g, const Rational& c) {
  WeightedMultigraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.w * c);
  return out;
}

WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b) {
  WeightedMultigraph out(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v, e.w);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count(), e.w);
  return out;
}

Rational weighted_degree(const WeightedMultigraph& g, Vertex x) {
  g.require_vertex(x);
  Rational d = 0;
  for (EdgeId e : g.incident(x)) d += g.edge(e).w;
  return d;
}

std::vector<Rational> weighted_degrees(const WeightedMultigraph& g) {
  std::vector<Rational> d(static_cast<size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    d[static_cast<size_t>(e.u)] += e.w;
    d[static_cast<size_t>(e.v)] += e.w;
  }
  return d;
}

Rational total_weight(const WeightedMultigraph& g) {
  Rational s = 0;
  for (const Edge& e : g.edges()) s += e.w;
  return s;
}

std::vector<int> component_labels(const WeightedMultigraph& g, int* count) {
  std::vector<int> label(static_cast<size_t>(g.vertex_count()), -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<size_t>(s)] != -1) continue;
    label[static_cast<size_t>(s)] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.other(e, x);
        if (label[static_cast<size_t>(y)] == -1) {
          label[static_cast<size_t>(y)] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

bool is_connected(const WeightedMultigraph& g) {
  int c = 0;
  component_labels(g, &c);
  return c <= 1;
}

int distance(const WeightedMultigraph& g, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{x};
  dist[static_cast<size_t>(x)] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    Vertex a = queue[i];
    for (EdgeId e : g.incident(a)) {
      Vertex b = g.other(e, a);
      if (dist[static_cast<size_t>(b)] == -1) {
        dist[static_cast<size_t>(b)] = dist[static_cast<size_t>(a)] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist[static_cast<size_t>(y)];
}

// ---------------------------------------------------------------- blocks

namespace detail {

void LocalBlocks::run(int n, const std::vector<std::pair<int, int>>& edges) {
  const size_t un = static_cast<size_t>(n);
  const int m = static_cast<int>(edges.size());
  block_of_edge_.assign(static_cast<size_t>(m), -1);
  for (auto& bv : block_vertices_) bv.clear();
  int blocks = 0;
  auto new_block = [&]() -> std::vector<int>& {
    if (static_cast<int>(block_vertices_.size()) <= blocks) block_vertices_.emplace_back();
    return block_vertices_[static_cast<size_t>(blocks++)];
  };
  membership_.assign(un, 0);
  disc_.assign(un, -1);
  low_.assign(un, 0);
  mark_.assign(un, -1);
  adj_start_.assign(un + 1, 0);
  for (const auto& [a, b] : edges) {
    ++adj_start_[static_cast<size_t>(a) + 1];
    ++adj_start_[static_cast<size_t>(b) + 1];
  }
  for (size_t i = 0; i < un; ++i) adj_start_[i + 1] += adj_start_[i];
  adj_.assign(static_cast<size_t>(2 * m), 0);
  {
    std::vector<int>& fill = low_;  // borrowed as a cursor before the DFS
    for (size_t i = 0; i < un; ++i) fill[i] = adj_start_[i];
    for (int e = 0; e < m; ++e) {
      adj_[static_cast<size_t>(fill[static_cast<size_t>(edges[static_cast<size_t>(e)].first)]++)] = e;
      adj_[static_cast<size_t>(fill[static_cast<size_t>(edges[static_cast<size_t>(e)].second)]++)] = e;
    }
  }
  edge_stack_.clear();
  frames_.clear();
  int timer = 0;

  auto close_block = [&](int stop_edge) {
    std::vector<int>& verts = new_block();
    const int id = blocks - 1;
    while (true) {
      int e = edge_stack_.back();
      edge_stack_.pop_back();
      block_of_edge_[static_cast<size_t>(e)] = id;
      for (int v : {edges[static_cast<size_t>(e)].first, edges[static_cast<size_t>(e)].second}) {
        if (mark_[static_cast<size_t>(v)] != id) {
          mark_[static_cast<size_t>(v)] = id;
          verts.push_back(v);
          ++membership_[static_cast<size_t>(v)];
        }
      }
      if (e == stop_edge) break;
    }
    std::sort(verts.begin(), verts.end());
  };

  for (int root = 0; root < n; ++root) {
    if (disc_[static_cast<size_t>(root)] != -1) continue;
    if (adj_start_[static_cast<size_t>(root)] == adj_start_[static_cast<size_t>(root) + 1]) {
      disc_[static_cast<size_t>(root)] = timer++;
      new_block().push_back(root);
      mark_[static_cast<size_t>(root)] = blocks - 1;
      ++membership_[static_cast<size_t>(root)];
      continue;
    }
    disc_[static_cast<size_t>(root)] = low_[static_cast<size_t>(root)] = timer++;
    frames_.push_back({root, -1, adj_start_[static_cast<size_t>(root)]});
    while (!frames_.empty()) {
      const int v = frames_.back().v;
      const int pe = frames_.back().parent_edge;
      const int next = frames_.back().next;
      if (next < adj_start_[static_cast<size_t>(v) + 1]) {
        ++frames_.back().next;
        const int e = adj_[static_cast<size_t>(next)];
        if (e == pe) continue;
        const auto& ed = edges[static_cast<size_t>(e)];
        const int u = ed.first == v ? ed.second : ed.first;
        if (disc_[static_cast<size_t>(u)] == -1) {
          edge_stack_.push_back(e);
          disc_[static_cast<size_t>(u)] = low_[static_cast<size_t>(u)] = timer++;
          frames_.push_back({u, e, adj_start_[static_cast<size_t>(u)]});
        } else if (disc_[static_cast<size_t>(u)] < disc_[static_cast<size_t>(v)]) {
          edge_stack_.push_back(e);
          low_[static_cast<size_t>(v)] = std::min(low_[static_cast<size_t>(v)], disc_[static_cast<size_t>(u)]);
        }
      } else {
        frames_.pop_back();
        if (frames_.empty()) break;
        const int p = frames_.back().v;
        low_[static_cast<size_t>(p)] = std::min(low_[static_cast<size_t>(p)], low_[static_cast<size_t>(v)]);
        if (low_[static_cast<size_t>(v)] >= disc_[static_cast<size_t>(p)]) close_block(pe);
      }
    }
  }
  block_vertices_.resize(static_cast<size_t>(blocks));
}

int LocalBlocks::cut_count(int b) const {
  int c = 0;
  for (int v : block_vertices_[static_cast<size_t>(b)])
    if (membership_[static_cast<size_t>(v)] >= 2) ++c;
  return c;
}

}  // namespace detail

bool BlockDecomposition::is_cut_vertex(Vertex x) const { return set_contains(cut_vertices, x); }

int BlockDecomposition::cut_vertex_count(size_t block) const {
  int c = 0;
  for (Vertex v : blocks.at(block).vertices)
    if (is_cut_vertex(v)) ++c;
  return c;
}

VertexSet BlockDecomposition::interior(size_t block) const {
  VertexSet out;
  for (Vertex v : blocks.at(block).vertices)
    if (!is_cut_vertex(v)) out.push_back(v);
  return out;
}

BlockDecomposition block_decomposition(const Subgraph& h) {
  const WeightedMultigraph& g = *h.parent;
  std::map<Vertex, int> index;
  for (size_t i = 0; i < h.vertices.size(); ++i) index[h.vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> local;
  local.reserve(h.edges.size());
  for (EdgeId e : h.edges) local.emplace_back(index.at(g.edge(e).u), index.at(g.edge(e).v));

  detail::LocalBlocks lb;
  lb.run(static_cast<int>(h.vertices.size()), local);

  BlockDecomposition out;
  out.blocks.resize(static_cast<size_t>(lb.block_count()));
  for (int b = 0; b < lb.block_count(); ++b)
    for (int v : lb.vertices_of(b)) out.blocks[static_cast<size_t>(b)].vertices.push_back(h.vertices[static_cast<size_t>(v)]);
  for (size_t i = 0; i < h.edges.size(); ++i)
    out.blocks[static_cast<size_t>(lb.block_of_edge()[i])].edges.push_back(h.edges[i]);
  for (auto& b : out.blocks) std::sort(b.edges.begin(), b.edges.end());
  // Deterministic order: by least edge id, isolated vertices by their vertex.
  std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
    auto key = [](const Block& x) {
      return x.edges.empty() ? std::make_pair(1, x.vertices.front()) : std::make_pair(0, x.edges.front());
    };
    return key(a) < key(b);
  });
  for (size_t i = 0; i < h.vertices.size(); ++i)
    if (lb.is_cut(static_cast<int>(i))) out.cut_vertices.push_back(h.vertices[i]);
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (Vertex v : out.blocks[b].vertices) {
      auto it = std::lower_bound(out.cut_vertices.begin(), out.cut_vertices.end(), v);
      if (it != out.cut_vertices.end() && *it == v)
        out.tree_edges.emplace_back(static_cast<int>(b),
                                    static_cast<int>(out.blocks.size() + static_cast<size_t>(it - out.cut_vertices.begin())));
    }
  return out;
}

BlockDecomposition block_decomposition(const WeightedMultigraph& g) {
  return block_decomposition(Subgraph::whole(g));
}

// ---------------------------------------------------------------- convex hull

Subgraph convex_hull(const Subgraph& h, const VertexSet& x) {
  if (x.empty()) throw GraphError("convex hull of an empty set");
  for (Vertex v : x)
    if (!h.contains_vertex(v)) throw GraphError("vertex " + std::to_string(v + 1) + " not in subgraph");

  const BlockDecomposition bd = block_decomposition(h);
  const size_t nb = bd.blocks.size();
  const size_t nodes = nb + bd.cut_vertices.size();
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : bd.tree_edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  auto node_of = [&](Vertex v) -> int {
    auto it = std::lower_bound(bd.cut_vertices.begin(), bd.cut_vertices.end(), v);
    if (it != bd.cut_vertices.end() && *it == v)
      return static_cast<int>(nb + static_cast<size_t>(it - bd.cut_vertices.begin()));
    for (size_t b = 0; b < nb; ++b)
      if (set_contains(bd.blocks[b].vertices, v)) return static_cast<int>(b);
    return -1;
  };

  // Components of the block-cut forest.
  std::vector<int> comp(nodes, -1);
  int ncomp = 0;
  for (size_t s = 0; s < nodes; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[static_cast<size_t>(a)])
        if (comp[static_cast<size_t>(b)] == -1) {
          comp[static_cast<size_t>(b)] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  std::vector<char> terminal(nodes, 0);
  std::vector<int> members(static_cast<size_t>(ncomp), 0);
  for (Vertex v : x) {
    int t = node_of(v);
    terminal[static_cast<size_t>(t)] = 1;
    ++members[static_cast<size_t>(comp[static_cast<size_t>(t)])];
  }

  // Steiner subtree: prune non-terminal leaves repeatedly, inside components with ≥ 2 members.
  std::vector<char> alive(nodes, 0);
  std::vector<int> degree(nodes, 0);
  for (size_t a = 0; a < nodes; ++a) {
    if (members[static_cast<size_t>(comp[a])] >= 2) {
      alive[a] = 1;
      degree[a] = static_cast<int>(adj[a].size());
    }
  }
  std::vector<int> queue;
  for (size_t a = 0; a < nodes; ++a)
    if (alive[a] && !terminal[a] && degree[a] <= 1) queue.push_back(static_cast<int>(a));
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    if (!alive[static_cast<size_t>(a)]) continue;
    alive[static_cast<size_t>(a)] = 0;
    for (int b : adj[static_cast<size_t>(a)]) {
      if (!alive[static_cast<size_t>(b)]) continue;
      if (--degree[static_cast<size_t>(b)] <= 1 && !terminal[static_cast<size_t>(b)]) queue.push_back(b);
    }
  }

  EdgeSet edges;
  std::vector<Vertex> verts(x.begin(), x.end());
  for (size_t b = 0; b < nb; ++b) {
    if (!alive[b]) continue;
    edges.insert(edges.end(), bd.blocks[b].edges.begin(), bd.blocks[b].edges.end());
    verts.insert(verts.end(), bd.blocks[b].vertices.begin(), bd.blocks[b].vertices.end());
  }
  Subgraph out;
  out.parent = h.parent;
  std::sort(edges.begin(), edges.end());
  out.edges = std::move(edges);
  out.vertices = make_set(std::move(verts));
  return out;
}

// ---------------------------------------------------------------- text format

WeightedMultigraph parse_graph(std::istream& in) {
  WeightedMultigraph g;
  bool have_header = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'v <n>'");
      if (have_header) throw ParseError(lineno, "duplicate vertex declaration");
      long n;
      try {
        size_t used = 0;
        n = std::stol(tok[1], &used);
        if (used != tok[1].size() || n < 0) throw std::invalid_argument("n");
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed vertex count '" + tok[1] + "'");
      }
      g = WeightedMultigraph(static_cast<int>(n));
      have_header = true;
    } else if (tok[0] == "e") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'e <u> <v> <weight>'");
      if (!have_header) throw ParseError(lineno, "edge before 'v <n>' header");
      long u, v;
      try {
        size_t a = 0, b = 0;
        u = std::stol(tok[1], &a);
        v = std::stol(tok[2], &b);
        if (a != tok[1].size() || b != tok[2].size()) throw std::invalid_argument("id");
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed vertex id");
      }
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(g.vertex_count()));
      if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
      Rational w;
      try {
        w = parse_rational(tok[3]);
      } catch (const std::exception& ex) {
        throw ParseError(lineno, ex.what());
      }
      if (w < 0) throw ParseError(lineno, "negative weight " + tok[3]);
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w);
    } else {
      throw ParseError(lineno, "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'v <n>' header");
  return g;
}

WeightedMultigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

WeightedMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const WeightedMultigraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << " " << to_string(e.w) << "\n";
  return out.str();
}

VertexSet parse_vertex_list(std::string_view text, const WeightedMultigraph& g) {
  std::vector<Vertex> out;
  std::string s(text);
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    size_t used = 0;
    long id;
    try {
      id = std::stol(item, &used);
    } catch (const std::exception&) {
      throw GraphError("malformed vertex id '" + item + "'");
    }
    if (used != item.size()) throw GraphError("malformed vertex id '" + item + "'");
    g.require_vertex(static_cast<Vertex>(id - 1));
    out.push_back(static_cast<Vertex>(id - 1));
  }
  return make_set(std::move(out));
}

std::string format_vertex_list(const VertexSet& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out;
}

}  // namespace maxmaxflow
