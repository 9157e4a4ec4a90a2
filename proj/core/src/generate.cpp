#include "maxmaxflow/generate.hpp"

#include <stdexcept>

namespace maxmaxflow {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

const Rational& weight_at(const std::vector<Rational>& w, size_t i) {
  static const Rational one(1);
  return w.empty() ? one : w.at(i);
}

const Rational& pick(const std::vector<Rational>& w, Rng& rng) {
  return w.at(static_cast<size_t>(rng.uniform(0, static_cast<std::int64_t>(w.size()) - 1)));
}

}  // namespace

WeightedMultigraph path_graph(int n, const std::vector<Rational>& weights) {
  require(n >= 1, "path needs n >= 1");
  require(weights.empty() || weights.size() == static_cast<size_t>(n - 1), "path needs n-1 weights");
  WeightedMultigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, weight_at(weights, static_cast<size_t>(i)));
  return g;
}

WeightedMultigraph cycle_graph(int n, const std::vector<Rational>& weights) {
  require(n >= 3, "cycle needs n >= 3");
  require(weights.empty() || weights.size() == static_cast<size_t>(n), "cycle needs n weights");
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, weight_at(weights, static_cast<size_t>(i)));
  return g;
}

WeightedMultigraph star_graph(int r, const Rational& w) {
  require(r >= 1, "star needs r >= 1");
  WeightedMultigraph g(r + 1);
  for (int i = 1; i <= r; ++i) g.add_edge(0, i, w);
  return g;
}

WeightedMultigraph wheel_graph(int r, const Rational& w) {
  require(r >= 3, "wheel needs r >= 3");
  WeightedMultigraph g(r + 1);
  for (int i = 1; i <= r; ++i) g.add_edge(0, i, w);
  for (int i = 1; i <= r; ++i) g.add_edge(i, i % r + 1, w);
  return g;
}

WeightedMultigraph complete_graph(int n, const Rational& w) {
  require(n >= 1, "complete graph needs n >= 1");
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, w);
  return g;
}

WeightedMultigraph tree_from_parents(const std::vector<int>& parent, const std::vector<Rational>& weights) {
  const int n = static_cast<int>(parent.size());
  require(n >= 1, "tree needs n >= 1");
  require(weights.empty() || weights.size() == parent.size() - 1, "tree needs n-1 weights");
  WeightedMultigraph g(n);
  for (int i = 1; i < n; ++i) {
    require(parent[static_cast<size_t>(i)] >= 0 && parent[static_cast<size_t>(i)] < i, "parent[i] must be < i");
    g.add_edge(parent[static_cast<size_t>(i)], i, weight_at(weights, static_cast<size_t>(i - 1)));
  }
  return g;
}

WeightedMultigraph theta_graph(int r, const Rational& w) {
  require(r >= 2, "theta needs r >= 2");
  WeightedMultigraph g(2);
  g.add_edge(0, 1, w);
  for (int len = 2; len <= r; ++len) {
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      Vertex next = g.add_vertex();
      g.add_edge(prev, next, i == 1 ? w : Rational(1));
      prev = next;
    }
    g.add_edge(prev, 1, Rational(1));
  }
  return g;
}

WeightedMultigraph k2s_graph(int s, const Rational& delta) {
  require(s >= 1, "k2s needs s >= 1");
  WeightedMultigraph g(2);
  for (int i = 0; i < s; ++i) g.add_edge(0, 1, delta / s);
  return g;
}

WeightedMultigraph parallelize(const WeightedMultigraph& g, int s) {
  require(s >= 1, "parallelize needs s >= 1");
  WeightedMultigraph out(g.vertex_count());
  for (const Edge& e : g.edges())
    for (int i = 0; i < s; ++i) out.add_edge(e.u, e.v, e.w / s);
  return out;
}

WeightedMultigraph truncated_regular_tree(int r, int depth, const Rational& w) {
  require(r >= 2 && depth >= 0, "regular tree needs r >= 2, depth >= 0");
  WeightedMultigraph g(1);
  std::vector<Vertex> frontier{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      const int children = d == 0 ? r : r - 1;
      for (int c = 0; c < children; ++c) {
        Vertex y = g.add_vertex();
        g.add_edge(x, y, w);
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

WeightedMultigraph disjoint_parallel_stars(int k, int r, int s, const Rational& lambda) {
  require(k >= 1 && r >= 1 && s >= 1, "stars need k, r, s >= 1");
  WeightedMultigraph g(k * (r + 1));
  for (int c = 0; c < k; ++c) {
    const Vertex center = c * (r + 1);
    for (int leaf = 1; leaf <= r; ++leaf)
      for (int i = 0; i < s; ++i) g.add_edge(center, center + leaf, lambda / s);
  }
  return g;
}

WeightedMultigraph random_graph(const RandomGraphConfig& cfg, Rng& rng) {
  require(cfg.min_vertices >= 1 && cfg.max_vertices >= cfg.min_vertices, "bad vertex range");
  require(cfg.max_multiplicity >= 1 && !cfg.weights.empty() && cfg.edge_den > 0, "bad random graph config");
  const int n = static_cast<int>(rng.uniform(cfg.min_vertices, cfg.max_vertices));
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!rng.chance(cfg.edge_num, cfg.edge_den)) continue;
      const int mult = static_cast<int>(rng.uniform(1, cfg.max_multiplicity));
      for (int c = 0; c < mult; ++c) {
        if (cfg.max_edges > 0 && g.edge_count() >= cfg.max_edges) break;
        g.add_edge(i, j, pick(cfg.weights, rng));
      }
    }
  return g;
}

WeightedMultigraph random_tree(int n, const std::vector<Rational>& weights, Rng& rng) {
  require(n >= 1 && !weights.empty(), "random tree needs n >= 1 and weights");
  WeightedMultigraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(static_cast<Vertex>(rng.uniform(0, i - 1)), i, pick(weights, rng));
  return g;
}

WeightedMultigraph random_separable_graph(int blocks, int max_block_size, const std::vector<Rational>& weights,
                                          Rng& rng) {
  require(blocks >= 1 && max_block_size >= 2 && !weights.empty(), "bad separable config");
  WeightedMultigraph g(1);
  for (int b = 0; b < blocks; ++b) {
    const Vertex anchor = static_cast<Vertex>(rng.uniform(0, g.vertex_count() - 1));
    const int size = static_cast<int>(rng.uniform(2, max_block_size));
    std::vector<Vertex> vs{anchor};
    for (int i = 1; i < size; ++i) vs.push_back(g.add_vertex());
    // A spanning cycle (or an edge) plus random chords keeps the piece 2-connected.
    for (int i = 0; i + 1 < size; ++i) g.add_edge(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(i) + 1], pick(weights, rng));
    if (size >= 3) g.add_edge(vs.back(), vs.front(), pick(weights, rng));
    for (int i = 0; i < size; ++i)
      for (int j = i + 2; j < size; ++j)
        if (!(i == 0 && j == size - 1) && rng.chance(1, 3))
          g.add_edge(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)], pick(weights, rng));
  }
  return g;
}

WeightedMultigraph generate(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "path") return path_graph(spec.n, spec.weights);
  if (f == "cycle") return cycle_graph(spec.n, spec.weights);
  if (f == "star") return star_graph(spec.r, spec.w);
  if (f == "wheel") return wheel_graph(spec.r, spec.w);
  if (f == "complete") return complete_graph(spec.n, spec.w);
  if (f == "theta") return theta_graph(spec.r, spec.w);
  if (f == "k2s") return k2s_graph(spec.s, spec.w);
  if (f == "parallel-path") return parallelize(path_graph(spec.n), spec.s);
  if (f == "regular-tree") return truncated_regular_tree(spec.r, spec.depth, spec.w);
  if (f == "stars") return disjoint_parallel_stars(spec.k, spec.r, spec.s, spec.w);
  Rng rng(spec.seed);
  if (f == "tree") return random_tree(spec.n, spec.weights.empty() ? std::vector<Rational>{1} : spec.weights, rng);
  if (f == "parallel-tree")
    return parallelize(random_tree(spec.n, std::vector<Rational>{spec.w}, rng), spec.s);
  if (f == "random") return random_graph(spec.random, rng);
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace maxmaxflow
