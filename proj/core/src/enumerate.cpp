#include "maxmaxflow/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maxmaxflow {

namespace {

const std::map<std::string, ClassKind>& kind_table() {
  static const std::map<std::string, ClassKind> table{
      {"W", ClassKind::W},   {"FPW", ClassKind::FPW},       {"SAW", ClassKind::SAW},     {"FPSAW", ClassKind::FPSAW},
      {"T", ClassKind::T},   {"F", ClassKind::F},           {"H", ClassKind::H},         {"Hp", ClassKind::Hp},
      {"Hpr", ClassKind::Hpr}, {"C", ClassKind::C},         {"BT", ClassKind::BT},       {"BF", ClassKind::BF},
      {"BFstar", ClassKind::BFstar}, {"B", ClassKind::B},   {"BlockPath", ClassKind::BlockPath}};
  return table;
}

bool is_forest_kind(ClassKind k) {
  switch (k) {
    case ClassKind::SAW:
    case ClassKind::FPSAW:
    case ClassKind::T:
    case ClassKind::F:
    case ClassKind::H:
    case ClassKind::Hp:
    case ClassKind::Hpr:
      return true;
    default:
      return false;
  }
}

bool is_path_kind(ClassKind k) { return k == ClassKind::SAW || k == ClassKind::FPSAW; }

// Vertices forced into the canonical member besides the endpoints of its edges.
VertexSet canonical_anchors(const SubgraphClassSpec& s) {
  switch (s.kind) {
    case ClassKind::F:
    case ClassKind::BF:
    case ClassKind::BFstar:
      return set_union(s.X, s.Y);
    case ClassKind::SAW:
    case ClassKind::BlockPath:
      return make_set({s.x, s.y});
    case ClassKind::FPSAW:
      return {s.x};
    default:
      return s.X;
  }
}

// Structural membership test for one class, reusing scratch buffers between candidates.
class Evaluator {
 public:
  Evaluator(const WeightedMultigraph& g, const SubgraphClassSpec& spec)
      : g_(g), spec_(spec), anchors_(canonical_anchors(spec)) {
    const size_t n = static_cast<size_t>(g.vertex_count());
    in_x_.assign(n, 0);
    in_y_.assign(n, 0);
    local_.assign(n, -1);
    for (Vertex v : spec.X) in_x_[static_cast<size_t>(v)] = 1;
    for (Vertex v : spec.Y) in_y_[static_cast<size_t>(v)] = 1;
    needs_blocks_ = spec.kind == ClassKind::BT || spec.kind == ClassKind::BF || spec.kind == ClassKind::BFstar ||
                    spec.kind == ClassKind::B || spec.kind == ClassKind::BlockPath;
  }

  bool accepts(const EdgeId* edges, int m) {
    build(edges, m);
    switch (spec_.kind) {
      case ClassKind::T:
        return forest() && comps_ == 1 && leaves_within(in_x_, nullptr);
      case ClassKind::F:
        return forest() && leaves_within(in_x_, &in_y_) && every_comp([&](int c) { return comp_y_[c] == 1; });
      case ClassKind::H:
        return forest() && leaves_within(in_x_, nullptr);
      case ClassKind::Hp:
        return forest() && leaves_within(in_x_, nullptr) &&
               every_comp([&](int c) { return comp_x_[c] >= spec_.p; });
      case ClassKind::Hpr:
        return forest() && comps_ == spec_.r && leaves_within(in_x_, nullptr) &&
               every_comp([&](int c) { return comp_x_[c] >= spec_.p; });
      case ClassKind::C:
        return every_comp([&](int c) { return comp_x_[c] >= 1; });
      case ClassKind::SAW:
        return saw(m);
      case ClassKind::FPSAW:
        return fpsaw(m);
      case ClassKind::BT:
        return bt(m);
      case ClassKind::BF:
        return bf(false);
      case ClassKind::BFstar:
        return bf(true);
      case ClassKind::B:
        return b();
      case ClassKind::BlockPath:
        return block_path();
      default:
        throw std::invalid_argument("walk classes are not edge sets");
    }
  }

 private:
  void build(const EdgeId* edges, int m) {
    for (Vertex v : verts_) local_[static_cast<size_t>(v)] = -1;
    verts_.clear();
    auto add = [&](Vertex v) {
      if (local_[static_cast<size_t>(v)] == -1) {
        local_[static_cast<size_t>(v)] = static_cast<int>(verts_.size());
        verts_.push_back(v);
      }
      return local_[static_cast<size_t>(v)];
    };
    for (Vertex v : anchors_) add(v);
    ledges_.clear();
    for (int i = 0; i < m; ++i) {
      const Edge& e = g_.edge(edges[i]);
      const int a = add(e.u), b = add(e.v);
      ledges_.emplace_back(a, b);
    }
    m_ = m;
    const size_t nv = verts_.size();
    deg_.assign(nv, 0);
    uf_.resize(nv);
    for (size_t i = 0; i < nv; ++i) uf_[i] = static_cast<int>(i);
    for (auto [a, b] : ledges_) {
      ++deg_[static_cast<size_t>(a)];
      ++deg_[static_cast<size_t>(b)];
      int ra = find(a), rb = find(b);
      if (ra != rb) uf_[static_cast<size_t>(ra)] = rb;
    }
    comp_.assign(nv, -1);
    comps_ = 0;
    comp_x_.clear();
    comp_y_.clear();
    for (size_t i = 0; i < nv; ++i) {
      const int r = find(static_cast<int>(i));
      if (comp_[static_cast<size_t>(r)] == -1) {
        comp_[static_cast<size_t>(r)] = comps_++;
        comp_x_.push_back(0);
        comp_y_.push_back(0);
      }
      comp_[i] = comp_[static_cast<size_t>(r)];
      const Vertex v = verts_[i];
      if (in_x_[static_cast<size_t>(v)]) ++comp_x_[static_cast<size_t>(comp_[i])];
      if (in_y_[static_cast<size_t>(v)]) ++comp_y_[static_cast<size_t>(comp_[i])];
    }
    if (needs_blocks_) blocks_.run(static_cast<int>(nv), ledges_);
  }

  int find(int a) {
    while (uf_[static_cast<size_t>(a)] != a) {
      uf_[static_cast<size_t>(a)] = uf_[static_cast<size_t>(uf_[static_cast<size_t>(a)])];
      a = uf_[static_cast<size_t>(a)];
    }
    return a;
  }

  bool forest() const { return m_ == static_cast<int>(verts_.size()) - comps_; }

  // Every vertex of degree 0 or 1 lies in S1 (or S2).
  bool leaves_within(const std::vector<char>& s1, const std::vector<char>* s2) const {
    for (size_t i = 0; i < verts_.size(); ++i) {
      if (deg_[i] > 1) continue;
      const size_t v = static_cast<size_t>(verts_[i]);
      if (!s1[v] && !(s2 && (*s2)[v])) return false;
    }
    return true;
  }

  template <class P>
  bool every_comp(P pred) const {
    for (int c = 0; c < comps_; ++c)
      if (!pred(static_cast<size_t>(c))) return false;
    return true;
  }

  int max_degree() const {
    int d = 0;
    for (int x : deg_) d = std::max(d, x);
    return d;
  }

  bool saw(int m) const {
    if (spec_.x == spec_.y) return m == 0;
    return forest() && comps_ == 1 && max_degree() <= 2 && deg_[static_cast<size_t>(local_[static_cast<size_t>(spec_.x)])] == 1 &&
           deg_[static_cast<size_t>(local_[static_cast<size_t>(spec_.y)])] == 1;
  }

  bool fpsaw(int m) const {
    if (in_y_[static_cast<size_t>(spec_.x)]) return m == 0;
    if (m == 0) return false;
    if (!(forest() && comps_ == 1 && max_degree() <= 2)) return false;
    if (deg_[static_cast<size_t>(local_[static_cast<size_t>(spec_.x)])] != 1) return false;
    int hits = 0;
    for (size_t i = 0; i < verts_.size(); ++i)
      if (in_y_[static_cast<size_t>(verts_[i])]) {
        if (deg_[i] != 1) return false;
        ++hits;
      }
    return hits == 1;
  }

  bool interior_meets(int b, const std::vector<char>& s1, const std::vector<char>* s2) const {
    for (int v : blocks_.vertices_of(b)) {
      if (blocks_.is_cut(v)) continue;
      const size_t gv = static_cast<size_t>(verts_[static_cast<size_t>(v)]);
      if (s1[gv] || (s2 && (*s2)[gv])) return true;
    }
    return false;
  }

  int count_in(int b, const std::vector<char>& s1, const std::vector<char>* s2) const {
    int c = 0;
    for (int v : blocks_.vertices_of(b)) {
      const size_t gv = static_cast<size_t>(verts_[static_cast<size_t>(v)]);
      if (s1[gv] || (s2 && (*s2)[gv])) ++c;
    }
    return c;
  }

  bool single_vertex_block(int b) const { return blocks_.vertices_of(b).size() == 1; }

  bool bt(int m) const {
    if (comps_ != 1) return false;
    const int nb = blocks_.block_count();
    if (nb == 1) {
      if (m == 0) return verts_.size() == 1 && spec_.X.size() == 1;
      return count_in(0, in_x_, nullptr) >= 2;
    }
    for (int b = 0; b < nb; ++b)
      if (blocks_.cut_count(b) == 1 && !interior_meets(b, in_x_, nullptr)) return false;
    return true;
  }

  bool bf(bool star) const {
    for (int c = 0; c < comps_; ++c)
      if (star ? comp_y_[static_cast<size_t>(c)] < 1 : comp_y_[static_cast<size_t>(c)] != 1) return false;
    for (int b = 0; b < blocks_.block_count(); ++b) {
      const int cuts = blocks_.cut_count(b);
      if (cuts == 1 && !interior_meets(b, in_x_, &in_y_)) return false;
      if (cuts == 0) {
        if (single_vertex_block(b)) {
          if (!in_y_[static_cast<size_t>(verts_[static_cast<size_t>(blocks_.vertices_of(b)[0])])]) return false;
        } else if (count_in(b, in_x_, &in_y_) < 2) {
          return false;
        }
      }
    }
    return true;
  }

  bool b() const {
    for (int b = 0; b < blocks_.block_count(); ++b) {
      const int cuts = blocks_.cut_count(b);
      if (cuts == 1 && !interior_meets(b, in_x_, nullptr)) return false;
      if (cuts == 0) {
        if (single_vertex_block(b)) {
          if (!in_x_[static_cast<size_t>(verts_[static_cast<size_t>(blocks_.vertices_of(b)[0])])]) return false;
        } else if (count_in(b, in_x_, nullptr) < 2) {
          return false;
        }
      }
    }
    return true;
  }

  bool block_path() const {
    if (comps_ != 1) return false;
    const int nb = blocks_.block_count();
    if (nb == 1) return verts_.size() >= 2;
    const int lx = local_[static_cast<size_t>(spec_.x)], ly = local_[static_cast<size_t>(spec_.y)];
    if (blocks_.is_cut(lx) || blocks_.is_cut(ly)) return false;
    int ends = 0, bx = -1, by = -1;
    for (int b = 0; b < nb; ++b) {
      if (blocks_.cut_count(b) != 1) continue;
      ++ends;
      const auto& vs = blocks_.vertices_of(b);
      if (std::binary_search(vs.begin(), vs.end(), lx)) bx = b;
      if (std::binary_search(vs.begin(), vs.end(), ly)) by = b;
    }
    return ends == 2 && bx >= 0 && by >= 0 && bx != by;
  }

  const WeightedMultigraph& g_;
  const SubgraphClassSpec& spec_;
  VertexSet anchors_;
  std::vector<char> in_x_, in_y_;
  std::vector<int> local_;
  std::vector<Vertex> verts_;
  std::vector<std::pair<int, int>> ledges_;
  std::vector<int> deg_, uf_, comp_, comp_x_, comp_y_;
  int comps_ = 0;
  int m_ = 0;
  bool needs_blocks_ = false;
  detail::LocalBlocks blocks_;
};

// Depth-first walk over all edge subsets of size <= M in lexicographic order.
// With forest pruning, subsets containing a cycle are skipped (every superset has one too);
// max_degree > 0 additionally skips subsets with a vertex of larger degree.
class SubsetWalker {
 public:
  SubsetWalker(const WeightedMultigraph& g, int M, std::uint64_t cap, bool forest_prune, int max_degree)
      : g_(g), M_(M), cap_(cap), forest_(forest_prune), max_degree_(max_degree) {
    uf_.resize(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < uf_.size(); ++i) uf_[i] = static_cast<int>(i);
    size_.assign(uf_.size(), 1);
    deg_.assign(uf_.size(), 0);
    weight_.assign(static_cast<size_t>(M) + 1, Rational(1));
  }

  template <class Visit>
  void run(Visit&& visit) {
    chosen_.clear();
    rec(0, visit);
  }

 private:
  int find(int a) const {
    while (uf_[static_cast<size_t>(a)] != a) a = uf_[static_cast<size_t>(a)];
    return a;
  }

  template <class Visit>
  void rec(int start, Visit& visit) {
    if (++work_ > cap_)
      throw WorkCapExceeded("enumeration work cap of " + std::to_string(cap_) +
                            " candidate subsets exceeded (raise MAXMAXFLOW_WORKCAP or lower M)");
    const size_t depth = chosen_.size();
    visit(chosen_, weight_[depth]);
    if (static_cast<int>(depth) == M_) return;
    for (int e = start; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if (max_degree_ > 0 && (deg_[static_cast<size_t>(ed.u)] >= max_degree_ || deg_[static_cast<size_t>(ed.v)] >= max_degree_))
        continue;
      int merged = -1;
      if (forest_) {
        int a = find(ed.u), b = find(ed.v);
        if (a == b) continue;
        if (size_[static_cast<size_t>(a)] > size_[static_cast<size_t>(b)]) std::swap(a, b);
        uf_[static_cast<size_t>(a)] = b;
        size_[static_cast<size_t>(b)] += size_[static_cast<size_t>(a)];
        merged = a;
      }
      ++deg_[static_cast<size_t>(ed.u)];
      ++deg_[static_cast<size_t>(ed.v)];
      chosen_.push_back(e);
      weight_[depth + 1] = weight_[depth] * ed.w;
      rec(e + 1, visit);
      chosen_.pop_back();
      --deg_[static_cast<size_t>(ed.u)];
      --deg_[static_cast<size_t>(ed.v)];
      if (merged >= 0) {
        const int b = uf_[static_cast<size_t>(merged)];
        size_[static_cast<size_t>(b)] -= size_[static_cast<size_t>(merged)];
        uf_[static_cast<size_t>(merged)] = merged;
      }
    }
  }

  const WeightedMultigraph& g_;
  int M_;
  std::uint64_t cap_;
  bool forest_;
  int max_degree_;
  std::uint64_t work_ = 0;
  std::vector<int> uf_, size_, deg_;
  std::vector<EdgeId> chosen_;
  std::vector<Rational> weight_;
};

void require_M(int M) {
  if (M < 0) throw std::invalid_argument("truncation order M must be >= 0");
}

}  // namespace

std::string class_kind_name(ClassKind k) {
  for (const auto& [name, kind] : kind_table())
    if (kind == k) return name;
  return "?";
}

ClassKind parse_class_kind(const std::string& name) {
  auto it = kind_table().find(name);
  if (it == kind_table().end()) {
    // Accept a few lowercase spellings used on the command line.
    for (const auto& [n, k] : kind_table()) {
      std::string lower = n;
      std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
      if (lower == name) return k;
    }
    if (name == "bf*") return ClassKind::BFstar;
    throw std::invalid_argument("unknown class '" + name + "'");
  }
  return it->second;
}

bool is_walk_kind(ClassKind k) { return k == ClassKind::W || k == ClassKind::FPW; }

void SubgraphClassSpec::validate(const WeightedMultigraph& g) const {
  for (Vertex v : X) g.require_vertex(v);
  for (Vertex v : Y) g.require_vertex(v);
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (kind) {
    case ClassKind::W:
    case ClassKind::SAW:
      need(x >= 0 && y >= 0, "class needs endpoints x and y");
      g.require_vertex(x);
      g.require_vertex(y);
      break;
    case ClassKind::FPW:
    case ClassKind::FPSAW:
      need(x >= 0, "class needs a start vertex x");
      g.require_vertex(x);
      need(!Y.empty(), "class needs a nonempty target set Y");
      break;
    case ClassKind::T:
    case ClassKind::BT:
      need(!X.empty(), "class needs a nonempty anchor set X");
      break;
    case ClassKind::F:
    case ClassKind::BF:
    case ClassKind::BFstar:
      need(!Y.empty(), "class needs a nonempty root set Y");
      break;
    case ClassKind::Hpr:
      need(r >= 1, "r must be >= 1");
      [[fallthrough]];
    case ClassKind::Hp:
      need(p >= 1, "p must be >= 1");
      break;
    case ClassKind::BlockPath:
      need(x >= 0 && y >= 0, "block path needs endpoints x and y");
      g.require_vertex(x);
      g.require_vertex(y);
      need(x != y, "block path needs x != y");
      break;
    default:
      break;
  }
}

std::string SubgraphClassSpec::describe() const {
  std::string s = class_kind_name(kind);
  if (x >= 0) s += " x=" + std::to_string(x + 1);
  if (y >= 0) s += " y=" + std::to_string(y + 1);
  if (!X.empty()) s += " X={" + format_vertex_list(X) + "}";
  if (!Y.empty()) s += " Y={" + format_vertex_list(Y) + "}";
  if (kind == ClassKind::Hp || kind == ClassKind::Hpr) s += " p=" + std::to_string(p);
  if (kind == ClassKind::Hpr) s += " r=" + std::to_string(r);
  return s;
}

// ---------------------------------------------------------------- walk families

CountSeries walk_counts(const WeightedMultigraph& g, Vertex x, Vertex y, int M) {
  g.require_vertex(x);
  g.require_vertex(y);
  require_M(M);
  const size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<Rational> cur(n), next(n);
  cur[static_cast<size_t>(y)] = 1;
  CountSeries out;
  out.spec.kind = ClassKind::W;
  out.spec.x = x;
  out.spec.y = y;
  out.values.push_back(cur[static_cast<size_t>(x)]);
  for (int m = 1; m <= M; ++m) {
    std::fill(next.begin(), next.end(), Rational(0));
    for (const Edge& e : g.edges()) {
      next[static_cast<size_t>(e.u)] += e.w * cur[static_cast<size_t>(e.v)];
      next[static_cast<size_t>(e.v)] += e.w * cur[static_cast<size_t>(e.u)];
    }
    std::swap(cur, next);
    out.values.push_back(cur[static_cast<size_t>(x)]);
  }
  return out;
}

std::vector<Rational> walk_totals(const WeightedMultigraph& g, Vertex x, int M) {
  g.require_vertex(x);
  require_M(M);
  const size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<Rational> cur(n, Rational(1)), next(n);
  std::vector<Rational> out{cur[static_cast<size_t>(x)]};
  for (int m = 1; m <= M; ++m) {
    std::fill(next.begin(), next.end(), Rational(0));
    for (const Edge& e : g.edges()) {
      next[static_cast<size_t>(e.u)] += e.w * cur[static_cast<size_t>(e.v)];
      next[static_cast<size_t>(e.v)] += e.w * cur[static_cast<size_t>(e.u)];
    }
    std::swap(cur, next);
    out.push_back(cur[static_cast<size_t>(x)]);
  }
  return out;
}

CountSeries fpw_counts(const WeightedMultigraph& g, Vertex x, const VertexSet& Y, int M) {
  g.require_vertex(x);
  require_M(M);
  if (Y.empty()) throw std::invalid_argument("first-passage target set Y is empty");
  const size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<char> target(n, 0);
  for (Vertex v : Y) {
    g.require_vertex(v);
    target[static_cast<size_t>(v)] = 1;
  }
  // cur[u] = weight of first-passage walks of the current length from u to Y.
  std::vector<Rational> cur(n), next(n);
  for (size_t u = 0; u < n; ++u) cur[u] = target[u] ? 1 : 0;
  CountSeries out;
  out.spec.kind = ClassKind::FPW;
  out.spec.x = x;
  out.spec.Y = Y;
  out.values.push_back(cur[static_cast<size_t>(x)]);
  for (int m = 1; m <= M; ++m) {
    std::fill(next.begin(), next.end(), Rational(0));
    for (const Edge& e : g.edges()) {
      if (!target[static_cast<size_t>(e.u)]) next[static_cast<size_t>(e.u)] += e.w * cur[static_cast<size_t>(e.v)];
      if (!target[static_cast<size_t>(e.v)]) next[static_cast<size_t>(e.v)] += e.w * cur[static_cast<size_t>(e.u)];
    }
    std::swap(cur, next);
    out.values.push_back(cur[static_cast<size_t>(x)]);
  }
  return out;
}

namespace {

// Simple paths from x; a path stops at its first vertex with stop[v] set and is counted there.
void path_dfs(const WeightedMultigraph& g, Vertex v, int depth, int M, const Rational& w, const std::vector<char>& stop,
              std::vector<char>& on_path, std::vector<Rational>& acc) {
  for (EdgeId e : g.incident(v)) {
    const Vertex u = g.other(e, v);
    if (on_path[static_cast<size_t>(u)]) continue;
    const Rational wu = w * g.edge(e).w;
    if (stop[static_cast<size_t>(u)]) {
      acc[static_cast<size_t>(depth + 1)] += wu;
      continue;
    }
    if (depth + 1 == M) continue;
    on_path[static_cast<size_t>(u)] = 1;
    path_dfs(g, u, depth + 1, M, wu, stop, on_path, acc);
    on_path[static_cast<size_t>(u)] = 0;
  }
}

std::vector<Rational> paths_to(const WeightedMultigraph& g, Vertex x, const std::vector<char>& stop, int M) {
  std::vector<Rational> acc(static_cast<size_t>(M) + 1);
  if (stop[static_cast<size_t>(x)]) {
    acc[0] = 1;
    return acc;
  }
  if (M == 0) return acc;
  std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
  on_path[static_cast<size_t>(x)] = 1;
  path_dfs(g, x, 0, M, Rational(1), stop, on_path, acc);
  return acc;
}

}  // namespace

CountSeries saw_counts(const WeightedMultigraph& g, Vertex x, Vertex y, int M) {
  g.require_vertex(x);
  g.require_vertex(y);
  require_M(M);
  std::vector<char> stop(static_cast<size_t>(g.vertex_count()), 0);
  stop[static_cast<size_t>(y)] = 1;
  CountSeries out;
  out.spec.kind = ClassKind::SAW;
  out.spec.x = x;
  out.spec.y = y;
  out.values = paths_to(g, x, stop, M);
  return out;
}

CountSeries fpsaw_counts(const WeightedMultigraph& g, Vertex x, const VertexSet& Y, int M) {
  g.require_vertex(x);
  require_M(M);
  if (Y.empty()) throw std::invalid_argument("first-passage target set Y is empty");
  std::vector<char> stop(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : Y) {
    g.require_vertex(v);
    stop[static_cast<size_t>(v)] = 1;
  }
  CountSeries out;
  out.spec.kind = ClassKind::FPSAW;
  out.spec.x = x;
  out.spec.Y = Y;
  out.values = paths_to(g, x, stop, M);
  return out;
}

// ---------------------------------------------------------------- edge-subset classes

bool is_in_class(const WeightedMultigraph& g, const EdgeSet& edges, const SubgraphClassSpec& spec) {
  if (is_walk_kind(spec.kind)) throw std::invalid_argument("walk classes are not edge sets");
  spec.validate(g);
  for (EdgeId e : edges)
    if (e < 0 || e >= g.edge_count()) return false;
  EdgeSet sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  Evaluator ev(g, spec);
  return ev.accepts(sorted.data(), static_cast<int>(sorted.size()));
}

std::vector<CountSeries> class_count_series_batch(const WeightedMultigraph& g,
                                                  const std::vector<SubgraphClassSpec>& specs, int M,
                                                  const EnumerationOptions& options) {
  require_M(M);
  std::vector<CountSeries> out(specs.size());
  if (specs.empty()) return out;
  bool forest_prune = true, path_prune = true;
  std::vector<Evaluator> evals;
  evals.reserve(specs.size());
  for (size_t i = 0; i < specs.size(); ++i) {
    if (is_walk_kind(specs[i].kind)) throw std::invalid_argument("walk classes are counted by recursion");
    specs[i].validate(g);
    forest_prune = forest_prune && is_forest_kind(specs[i].kind);
    path_prune = path_prune && is_path_kind(specs[i].kind);
    out[i].spec = specs[i];
    out[i].values.assign(static_cast<size_t>(M) + 1, Rational(0));
    evals.emplace_back(g, out[i].spec);
  }
  SubsetWalker walker(g, M, options.work_cap, forest_prune, path_prune ? 2 : 0);
  walker.run([&](const std::vector<EdgeId>& chosen, const Rational& w) {
    const int m = static_cast<int>(chosen.size());
    for (size_t i = 0; i < evals.size(); ++i)
      if (evals[i].accepts(chosen.data(), m)) out[i].values[static_cast<size_t>(m)] += w;
  });
  return out;
}

CountSeries class_count_series(const WeightedMultigraph& g, const SubgraphClassSpec& spec, int M,
                               const EnumerationOptions& options) {
  switch (spec.kind) {
    case ClassKind::W: {
      spec.validate(g);
      return walk_counts(g, spec.x, spec.y, M);
    }
    case ClassKind::FPW:
      spec.validate(g);
      return fpw_counts(g, spec.x, spec.Y, M);
    default:
      return class_count_series_batch(g, {spec}, M, options).front();
  }
}

void for_each_member(const WeightedMultigraph& g, const SubgraphClassSpec& spec, int M,
                     const std::function<void(const EdgeSet&)>& visit, const EnumerationOptions& options) {
  require_M(M);
  if (is_walk_kind(spec.kind)) throw std::invalid_argument("walk classes are not edge sets");
  spec.validate(g);
  Evaluator ev(g, spec);
  SubsetWalker walker(g, M, options.work_cap, is_forest_kind(spec.kind), is_path_kind(spec.kind) ? 2 : 0);
  walker.run([&](const std::vector<EdgeId>& chosen, const Rational&) {
    if (ev.accepts(chosen.data(), static_cast<int>(chosen.size()))) visit(chosen);
  });
}

std::vector<Rational> block_through_edge_counts(const WeightedMultigraph& g, EdgeId e, int M,
                                                const EnumerationOptions& options) {
  require_M(M);
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge id out of range");
  const WeightedMultigraph rest = without_edge(g, e);
  const Edge& fixed = g.edge(e);
  std::vector<Rational> out(static_cast<size_t>(M) + 1);
  if (M < 2) return out;
  detail::LocalBlocks lb;
  std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<Vertex> verts;
  std::vector<std::pair<int, int>> ledges;
  SubsetWalker walker(rest, M - 1, options.work_cap, false, 0);
  walker.run([&](const std::vector<EdgeId>& chosen, const Rational& w) {
    if (chosen.empty()) return;
    for (Vertex v : verts) local[static_cast<size_t>(v)] = -1;
    verts.clear();
    ledges.clear();
    auto add = [&](Vertex v) {
      if (local[static_cast<size_t>(v)] == -1) {
        local[static_cast<size_t>(v)] = static_cast<int>(verts.size());
        verts.push_back(v);
      }
      return local[static_cast<size_t>(v)];
    };
    ledges.emplace_back(add(fixed.u), add(fixed.v));
    for (EdgeId id : chosen) {
      const Edge& ed = rest.edge(id);
      const int a = add(ed.u), b = add(ed.v);
      ledges.emplace_back(a, b);
    }
    lb.run(static_cast<int>(verts.size()), ledges);
    if (lb.block_count() == 1) out[chosen.size() + 1] += w;
  });
  return out;
}

// ---------------------------------------------------------------- decomposition audits

namespace {

// Unique path in the forest `h` from x to the first vertex of `target`.
EdgeSet path_to_set(const Subgraph& h, Vertex x, const VertexSet& target) {
  const WeightedMultigraph& g = *h.parent;
  if (set_contains(target, x)) return {};
  std::map<Vertex, EdgeId> via;
  std::vector<Vertex> queue{x};
  via[x] = -1;
  for (size_t i = 0; i < queue.size(); ++i) {
    const Vertex a = queue[i];
    if (set_contains(target, a)) {
      EdgeSet path;
      for (Vertex v = a; v != x; v = g.other(via[v], v)) path.push_back(via[v]);
      std::sort(path.begin(), path.end());
      return path;
    }
    for (EdgeId e : g.incident(a)) {
      if (!std::binary_search(h.edges.begin(), h.edges.end(), e)) continue;
      const Vertex b = g.other(e, a);
      if (via.count(b)) continue;
      via[b] = e;
      queue.push_back(b);
    }
  }
  throw std::logic_error("no path from x to the hull");
}

}  // namespace

DecompositionAudit audit_forest_split(const WeightedMultigraph& g, const VertexSet& X, const VertexSet& Y, Vertex x,
                                      int M, const EnumerationOptions& options) {
  if (!set_contains(X, x) || set_contains(Y, x)) throw std::invalid_argument("audit needs x in X \\ Y");
  const VertexSet Xr = set_difference(X, {x});
  const VertexSet anchors1 = set_union(Xr, Y);
  SubgraphClassSpec whole{ClassKind::F, X, Y};
  SubgraphClassSpec part{ClassKind::F, Xr, Y};
  DecompositionAudit audit;
  audit.direct.assign(static_cast<size_t>(M) + 1, Rational(0));
  audit.recombined.assign(static_cast<size_t>(M) + 1, Rational(0));
  std::set<std::pair<EdgeSet, EdgeSet>> images;
  for_each_member(
      g, whole, M,
      [&](const EdgeSet& edges) {
        ++audit.members;
        audit.direct[edges.size()] += subgraph_weight(g, edges);
        const Subgraph f = Subgraph::spanned(g, edges, set_union(X, Y));
        const Subgraph f1 = convex_hull(f, anchors1);
        const EdgeSet p = path_to_set(f, x, f1.vertices);
        EdgeSet both;
        std::set_union(f1.edges.begin(), f1.edges.end(), p.begin(), p.end(), std::back_inserter(both));
        const bool disjoint = both.size() == f1.edges.size() + p.size();
        SubgraphClassSpec path_spec{ClassKind::FPSAW, {}, f1.vertices};
        path_spec.x = x;
        if (!disjoint || both != edges || !is_in_class(g, f1.edges, part) || !is_in_class(g, p, path_spec))
          audit.parts_valid = false;
        if (!images.insert({f1.edges, p}).second) audit.injective = false;
      },
      options);
  for_each_member(
      g, part, M,
      [&](const EdgeSet& edges) {
        const Rational w1 = subgraph_weight(g, edges);
        const VertexSet v1 = Subgraph::spanned(g, edges, anchors1).vertices;
        const int i = static_cast<int>(edges.size());
        const auto tail = fpsaw_counts(g, x, v1, M - i).values;
        for (int j = 0; i + j <= M; ++j) audit.recombined[static_cast<size_t>(i + j)] += w1 * tail[static_cast<size_t>(j)];
      },
      options);
  return audit;
}

DecompositionAudit audit_blockforest_split(const WeightedMultigraph& g, const VertexSet& X, const VertexSet& Y,
                                           Vertex x, int M, const EnumerationOptions& options) {
  if (!set_contains(X, x) || set_contains(Y, x)) throw std::invalid_argument("audit needs x in X \\ Y");
  const VertexSet Xr = set_difference(X, {x});
  const VertexSet anchors1 = set_union(Xr, Y);
  SubgraphClassSpec whole{ClassKind::BF, X, Y};
  SubgraphClassSpec part{ClassKind::BF, Xr, Y};
  DecompositionAudit audit;
  audit.direct.assign(static_cast<size_t>(M) + 1, Rational(0));
  audit.recombined.assign(static_cast<size_t>(M) + 1, Rational(0));
  std::set<std::pair<EdgeSet, EdgeSet>> images;
  for_each_member(
      g, whole, M,
      [&](const EdgeSet& edges) {
        ++audit.members;
        audit.direct[edges.size()] += subgraph_weight(g, edges);
        const Subgraph h = Subgraph::spanned(g, edges, set_union(X, Y));
        const Subgraph h1 = convex_hull(h, anchors1);
        Subgraph rest;
        rest.parent = &g;
        rest.vertices = h.vertices;
        std::set_difference(h.edges.begin(), h.edges.end(), h1.edges.begin(), h1.edges.end(),
                            std::back_inserter(rest.edges));
        const Subgraph h2 = convex_hull(rest, set_union({x}, h1.vertices));
        EdgeSet both;
        std::set_union(h1.edges.begin(), h1.edges.end(), h2.edges.begin(), h2.edges.end(), std::back_inserter(both));
        SubgraphClassSpec second{ClassKind::BF, {x}, h1.vertices};
        if (both != edges || !is_in_class(g, h1.edges, part) || !is_in_class(g, h2.edges, second))
          audit.parts_valid = false;
        if (!images.insert({h1.edges, h2.edges}).second) audit.injective = false;
      },
      options);
  for_each_member(
      g, part, M,
      [&](const EdgeSet& edges) {
        const Rational w1 = subgraph_weight(g, edges);
        const VertexSet v1 = Subgraph::spanned(g, edges, anchors1).vertices;
        const int i = static_cast<int>(edges.size());
        SubgraphClassSpec second{ClassKind::BF, {x}, v1};
        const auto tail = class_count_series(g, second, M - i, options).values;
        for (int j = 0; i + j <= M; ++j) audit.recombined[static_cast<size_t>(i + j)] += w1 * tail[static_cast<size_t>(j)];
      },
      options);
  return audit;
}

}  // namespace maxmaxflow
