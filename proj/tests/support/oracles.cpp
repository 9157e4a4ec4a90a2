#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

bool in(const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

Rational cut_weight(const WeightedMultigraph& g, std::uint64_t side) {
  Rational w = 0;
  for (const auto& e : g.edges())
    if (((side >> e.u) & 1) != ((side >> e.v) & 1)) w += e.w;
  return w;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
    return a;
  }
  void join(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Union-find over parent vertex ids restricted to `vertices` minus `removed`.
UnionFind connect(const WeightedMultigraph& g, const EdgeSet& edges, Vertex removed) {
  UnionFind uf(g.vertex_count());
  for (auto id : edges) {
    const auto& e = g.edge(id);
    if (e.u != removed && e.v != removed) uf.join(e.u, e.v);
  }
  return uf;
}

// Visits every walk from x of length <= M; `step` decides whether a walk may be extended
// through vertex v and `count` whether the walk ending at v is recorded.
void walk_dfs(const WeightedMultigraph& g, Vertex x, int M, const std::function<bool(const std::vector<Vertex>&)>& alive,
              const std::function<bool(const std::vector<Vertex>&)>& count, std::vector<Rational>& out) {
  out.assign(static_cast<size_t>(M + 1), Rational(0));
  std::vector<Vertex> path{x};
  std::function<void(const Rational&)> go = [&](const Rational& w) {
    const int len = static_cast<int>(path.size()) - 1;
    if (count(path)) out[static_cast<size_t>(len)] += w;
    if (len == M || !alive(path)) return;
    for (auto id : g.incident(path.back())) {
      path.push_back(g.other(id, path.back()));
      go(w * g.edge(id).w);
      path.pop_back();
    }
  };
  go(Rational(1));
}

bool distinct(const std::vector<Vertex>& p) {
  std::vector<Vertex> s = p;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

Rational min_cut(const WeightedMultigraph& g, Vertex x, Vertex y) {
  const int n = g.vertex_count();
  Rational best = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!((s >> x) & 1) || ((s >> y) & 1)) continue;
    const Rational w = cut_weight(g, s);
    if (best < 0 || w < best) best = w;
  }
  return best;
}

Rational lambda(const WeightedMultigraph& g) {
  Rational best = 0;
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y = x + 1; y < g.vertex_count(); ++y) best = std::max(best, min_cut(g, x, y));
  return best;
}

std::vector<Rational> degrees(const WeightedMultigraph& g) {
  std::vector<Rational> d(static_cast<size_t>(g.vertex_count()), Rational(0));
  for (const auto& e : g.edges()) {
    d[static_cast<size_t>(e.u)] += e.w;
    d[static_cast<size_t>(e.v)] += e.w;
  }
  return d;
}

Rational kth_largest_degree(const WeightedMultigraph& g, int k) {
  auto d = degrees(g);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d.at(static_cast<size_t>(k - 1));
}

Rational kth_smallest_degree(const WeightedMultigraph& g, int k) {
  auto d = degrees(g);
  std::sort(d.begin(), d.end());
  return d.at(static_cast<size_t>(k - 1));
}

Rational degeneracy_k(const WeightedMultigraph& g, int k) {
  const int n = g.vertex_count();
  Rational best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) < k) continue;
    std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
    for (const auto& e : g.edges())
      if (((s >> e.u) & 1) && ((s >> e.v) & 1)) {
        d[static_cast<size_t>(e.u)] += e.w;
        d[static_cast<size_t>(e.v)] += e.w;
      }
    std::vector<Rational> inside;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1) inside.push_back(d[static_cast<size_t>(v)]);
    std::sort(inside.begin(), inside.end());
    best = std::max(best, inside[static_cast<size_t>(k - 1)]);
  }
  return best;
}

std::vector<Rational> walks(const WeightedMultigraph& g, Vertex x, Vertex y, int M) {
  std::vector<Rational> out;
  walk_dfs(g, x, M, [](const auto&) { return true; }, [&](const auto& p) { return p.back() == y; }, out);
  return out;
}

std::vector<Rational> walks_from(const WeightedMultigraph& g, Vertex x, int M) {
  std::vector<Rational> out;
  walk_dfs(g, x, M, [](const auto&) { return true; }, [](const auto&) { return true; }, out);
  return out;
}

std::vector<Rational> first_passage_walks(const WeightedMultigraph& g, Vertex x, const VertexSet& Y, int M) {
  std::vector<Rational> out;
  walk_dfs(g, x, M, [&](const auto& p) { return !in(Y, p.back()); }, [&](const auto& p) { return in(Y, p.back()); },
           out);
  return out;
}

std::vector<Rational> self_avoiding_walks(const WeightedMultigraph& g, Vertex x, Vertex y, int M) {
  std::vector<Rational> out;
  walk_dfs(g, x, M, [](const auto& p) { return distinct(p); },
           [&](const auto& p) { return p.back() == y && distinct(p); }, out);
  return out;
}

std::vector<Rational> first_passage_saws(const WeightedMultigraph& g, Vertex x, const VertexSet& Y, int M) {
  std::vector<Rational> out;
  walk_dfs(g, x, M, [&](const auto& p) { return distinct(p) && !in(Y, p.back()); },
           [&](const auto& p) { return distinct(p) && in(Y, p.back()); }, out);
  return out;
}

Structure analyse(const WeightedMultigraph& g, const VertexSet& vertices, const EdgeSet& edges) {
  Structure s;
  const size_t nv = vertices.size();
  auto pos = [&](Vertex v) { return static_cast<size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin()); };

  UnionFind whole = connect(g, edges, -1);
  std::vector<int> roots;
  s.component.resize(nv);
  for (size_t i = 0; i < nv; ++i) {
    const int r = whole.find(vertices[i]);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      s.component[i] = static_cast<int>(roots.size());
      roots.push_back(r);
    } else {
      s.component[i] = static_cast<int>(it - roots.begin());
    }
  }
  s.components = static_cast<int>(roots.size());

  s.degree.assign(nv, 0);
  for (auto id : edges) {
    ++s.degree[pos(g.edge(id).u)];
    ++s.degree[pos(g.edge(id).v)];
  }

  std::vector<UnionFind> without;
  for (size_t i = 0; i < nv; ++i) without.push_back(connect(g, edges, vertices[i]));

  // v is a cut vertex iff two of its neighbours are disconnected in H - v.
  s.cut.assign(nv, false);
  for (size_t i = 0; i < nv; ++i) {
    std::vector<Vertex> nb;
    for (auto id : edges) {
      const auto& e = g.edge(id);
      if (e.u == vertices[i]) nb.push_back(e.v);
      if (e.v == vertices[i]) nb.push_back(e.u);
    }
    for (size_t a = 0; a < nb.size() && !s.cut[i]; ++a)
      for (size_t b = a + 1; b < nb.size(); ++b)
        if (without[i].find(nb[a]) != without[i].find(nb[b])) {
          s.cut[i] = true;
          break;
        }
  }

  auto endpoint_avoiding = [&](maxmaxflow::EdgeId id, Vertex v) {
    const auto& e = g.edge(id);
    return e.u == v ? e.v : e.u;
  };
  UnionFind same(static_cast<int>(edges.size()));
  for (size_t a = 0; a < edges.size(); ++a)
    for (size_t b = a + 1; b < edges.size(); ++b) {
      if (whole.find(g.edge(edges[a]).u) != whole.find(g.edge(edges[b]).u)) continue;
      bool together = true;
      for (size_t i = 0; i < nv && together; ++i) {
        const Vertex v = vertices[i];
        together = without[i].find(endpoint_avoiding(edges[a], v)) == without[i].find(endpoint_avoiding(edges[b], v));
      }
      if (together) same.join(static_cast<int>(a), static_cast<int>(b));
    }
  std::vector<int> block_root;
  for (size_t a = 0; a < edges.size(); ++a) {
    const int r = same.find(static_cast<int>(a));
    auto it = std::find(block_root.begin(), block_root.end(), r);
    size_t b = static_cast<size_t>(it - block_root.begin());
    if (it == block_root.end()) {
      block_root.push_back(r);
      s.block_vertices.emplace_back();
    }
    for (Vertex v : {g.edge(edges[a]).u, g.edge(edges[a]).v})
      if (!in(s.block_vertices[b], v)) s.block_vertices[b].push_back(v);
  }
  for (size_t i = 0; i < nv; ++i)
    if (s.degree[i] == 0) s.block_vertices.push_back({vertices[i]});
  for (const auto& bv : s.block_vertices) {
    int c = 0;
    for (Vertex v : bv) c += s.cut[pos(v)] ? 1 : 0;
    s.block_cuts.push_back(c);
  }
  return s;
}

bool member(const WeightedMultigraph& g, const VertexSet& vertices, const EdgeSet& edges, const ClassQuery& q) {
  const Structure s = analyse(g, vertices, edges);
  const size_t nv = vertices.size();
  auto subset_of_V = [&](const VertexSet& a) {
    return std::all_of(a.begin(), a.end(), [&](Vertex v) { return in(vertices, v); });
  };
  auto per_component = [&](const VertexSet& a) {
    std::vector<int> c(static_cast<size_t>(s.components), 0);
    for (size_t i = 0; i < nv; ++i)
      if (in(a, vertices[i])) ++c[static_cast<size_t>(s.component[i])];
    return c;
  };
  auto interior_meets = [&](size_t b, const VertexSet& a) {
    for (Vertex v : s.block_vertices[b]) {
      const size_t i = static_cast<size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
      if (!s.cut[i] && in(a, v)) return true;
    }
    return false;
  };
  auto count_in = [&](const VertexSet& bv, const VertexSet& a) {
    return std::count_if(bv.begin(), bv.end(), [&](Vertex v) { return in(a, v); });
  };
  VertexSet XY = q.X;
  for (Vertex v : q.Y)
    if (!in(XY, v)) XY.push_back(v);

  const bool forest = static_cast<int>(edges.size()) == static_cast<int>(nv) - s.components;
  auto leaves_in = [&](const VertexSet& a) {
    for (size_t i = 0; i < nv; ++i)
      if (s.degree[i] <= 1 && !in(a, vertices[i])) return false;
    return true;
  };

  switch (q.kind) {
    case Kind::T:
      return forest && s.components == 1 && leaves_in(q.X) && subset_of_V(q.X);
    case Kind::F: {
      if (!forest || !leaves_in(XY) || !subset_of_V(XY)) return false;
      for (int c : per_component(q.Y))
        if (c != 1) return false;
      return true;
    }
    case Kind::H:
    case Kind::Hp:
    case Kind::Hpr: {
      if (!forest || !leaves_in(q.X) || !subset_of_V(q.X)) return false;
      if (q.kind == Kind::H) return true;
      for (int c : per_component(q.X))
        if (c < q.p) return false;
      return q.kind == Kind::Hp || s.components == q.r;
    }
    case Kind::C: {
      if (!subset_of_V(q.X)) return false;
      for (int c : per_component(q.X))
        if (c < 1) return false;
      return true;
    }
    case Kind::BT: {
      if (!subset_of_V(q.X) || s.components != 1) return false;
      for (size_t b = 0; b < s.block_vertices.size(); ++b)
        if (s.block_cuts[b] == 1 && !interior_meets(b, q.X)) return false;
      if (s.block_vertices.size() == 1) {
        const bool isolated_vertex = edges.empty() && nv == 1;
        return isolated_vertex || count_in(s.block_vertices[0], q.X) >= 2;
      }
      return true;
    }
    case Kind::BF:
    case Kind::BFstar:
    case Kind::B: {
      const VertexSet& tied = q.kind == Kind::B ? q.X : XY;
      if (!subset_of_V(tied)) return false;
      if (q.kind != Kind::B)
        for (int c : per_component(q.Y))
          if (q.kind == Kind::BF ? c != 1 : c < 1) return false;
      const VertexSet& isolated_ok = q.kind == Kind::B ? q.X : q.Y;
      for (size_t b = 0; b < s.block_vertices.size(); ++b) {
        if (s.block_cuts[b] == 1 && !interior_meets(b, tied)) return false;
        if (s.block_cuts[b] == 0) {
          const auto& bv = s.block_vertices[b];
          const bool lone = bv.size() == 1 && s.degree[static_cast<size_t>(
                                                   std::find(vertices.begin(), vertices.end(), bv[0]) - vertices.begin())] == 0;
          if (!(lone && in(isolated_ok, bv[0])) && count_in(bv, tied) < 2) return false;
        }
      }
      return true;
    }
    case Kind::BlockPath: {
      if (q.x == q.y || !in(vertices, q.x) || !in(vertices, q.y) || s.components != 1) return false;
      if (s.block_vertices.size() == 1) return true;
      std::vector<size_t> ends;
      for (size_t b = 0; b < s.block_vertices.size(); ++b)
        if (s.block_cuts[b] == 1) ends.push_back(b);
      if (ends.size() != 2) return false;
      return (interior_meets(ends[0], {q.x}) && interior_meets(ends[1], {q.y})) ||
             (interior_meets(ends[0], {q.y}) && interior_meets(ends[1], {q.x}));
    }
  }
  return false;
}

std::vector<Rational> class_counts(const WeightedMultigraph& g, const ClassQuery& q, int M) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<Rational> out(static_cast<size_t>(M + 1), Rational(0));
  for (std::uint64_t es = 0; es < (std::uint64_t{1} << m); ++es) {
    const int size = std::popcount(es);
    if (size > M) continue;
    EdgeSet edges;
    std::uint64_t covered = 0;
    Rational w = 1;
    for (int i = 0; i < m; ++i)
      if ((es >> i) & 1) {
        edges.push_back(i);
        covered |= std::uint64_t{1} << g.edge(i).u;
        covered |= std::uint64_t{1} << g.edge(i).v;
        w *= g.edge(i).w;
      }
    const std::uint64_t free = ((std::uint64_t{1} << n) - 1) & ~covered;
    // Every subset of the uncovered vertices, as isolated vertices of H.
    for (std::uint64_t extra = free;; extra = (extra - 1) & free) {
      VertexSet vertices;
      for (int v = 0; v < n; ++v)
        if (((covered | extra) >> v) & 1) vertices.push_back(v);
      if (member(g, vertices, edges, q)) out[static_cast<size_t>(size)] += w;
      if (extra == 0) break;
    }
  }
  return out;
}

Integer colourings(const WeightedMultigraph& g, int q) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<size_t>(n), -1);
  std::function<Integer(int)> go = [&](int v) -> Integer {
    if (v == n) return 1;
    Integer total = 0;
    for (int c = 0; c < q; ++c) {
      bool ok = true;
      for (auto id : g.incident(v)) {
        const Vertex u = g.other(id, v);
        if (u < v && colour[static_cast<size_t>(u)] == c) ok = false;
      }
      if (!ok) continue;
      colour[static_cast<size_t>(v)] = c;
      total += go(v + 1);
    }
    colour[static_cast<size_t>(v)] = -1;
    return total;
  };
  return go(0);
}

Rational C(unsigned m, const Rational& k) {
  if (m == 0) return 1;
  Rational num = k;
  for (unsigned i = 1; i < m; ++i) num *= Rational(m) + k;
  Rational den = 1;
  for (unsigned i = 2; i <= m; ++i) den *= i;
  return num / den;
}

Rational B(unsigned m, const Rational& k) {
  if (m == 0) return 1;
  Rational num = k - 1;
  for (unsigned i = 1; i < m; ++i) num *= Rational(2 * m) + k - 1;
  Rational den = 1;
  for (unsigned i = 2; i <= m; ++i) den *= i;
  return num / den;
}

}  // namespace oracle
