#include "maxmaxflow/chromatic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "maxmaxflow/flowcut.hpp"
#include "maxmaxflow/generate.hpp"
#include "maxmaxflow/invariants.hpp"
#include "maxmaxflow/rng.hpp"

namespace maxmaxflow {

using Poly = std::vector<Integer>;

namespace {

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Exact division by q^k; the low coefficients must vanish.
Poly divide_q_power(const Poly& p, size_t k) {
  for (size_t i = 0; i < k && i < p.size(); ++i)
    if (p[i] != 0) throw std::logic_error("chromatic polynomial not divisible by q^k");
  if (k >= p.size()) return Poly{0};
  return Poly(p.begin() + static_cast<long>(k), p.end());
}

Poly q_power(int n) {
  Poly p(static_cast<size_t>(n) + 1);
  p[static_cast<size_t>(n)] = 1;
  return p;
}

// q(q-1)...(q-n+1)
Poly falling(int n) {
  Poly p{1};
  for (int i = 0; i < n; ++i) p = poly_mul(p, Poly{Integer(-i), 1});
  return p;
}

// (q-1)^n + (-1)^n (q-1)
Poly cycle_poly(int n) {
  Poly p{1};
  for (int i = 0; i < n; ++i) p = poly_mul(p, Poly{-1, 1});
  return n % 2 == 0 ? poly_add(p, Poly{-1, 1}) : poly_sub(p, Poly{-1, 1});
}

// Simple graph on at most 16 vertices as adjacency bitmasks.
struct SG {
  int n = 0;
  std::array<std::uint32_t, 16> adj{};

  int edges() const {
    int m = 0;
    for (int v = 0; v < n; ++v) m += std::popcount(adj[static_cast<size_t>(v)]);
    return m / 2;
  }
  std::uint32_t all() const { return n == 32 ? ~0u : ((1u << n) - 1); }
  bool operator<(const SG& o) const {
    if (n != o.n) return n < o.n;
    return std::lexicographical_compare(adj.begin(), adj.begin() + n, o.adj.begin(), o.adj.begin() + o.n);
  }
};

std::uint32_t drop_bit(std::uint32_t mask, int v) {
  const std::uint32_t low = mask & ((1u << v) - 1);
  const std::uint32_t high = (mask >> (v + 1)) << v;
  return low | high;
}

SG remove_vertex(const SG& g, int v) {
  SG out;
  out.n = g.n - 1;
  for (int u = 0, k = 0; u < g.n; ++u) {
    if (u == v) continue;
    out.adj[static_cast<size_t>(k++)] = drop_bit(g.adj[static_cast<size_t>(u)], v);
  }
  return out;
}

// Identify v with u (u != v).
SG contract(const SG& g, int u, int v) {
  SG h = g;
  h.adj[static_cast<size_t>(u)] |= h.adj[static_cast<size_t>(v)];
  for (int w = 0; w < g.n; ++w)
    if (h.adj[static_cast<size_t>(v)] >> w & 1u) h.adj[static_cast<size_t>(w)] |= 1u << u;
  h.adj[static_cast<size_t>(u)] &= ~((1u << u) | (1u << v));
  return remove_vertex(h, v);
}

SG induced(const SG& g, std::uint32_t keep) {
  SG out;
  std::array<int, 16> pos{};
  for (int v = 0; v < g.n; ++v)
    if (keep >> v & 1u) pos[static_cast<size_t>(v)] = out.n++;
  for (int v = 0; v < g.n; ++v) {
    if (!(keep >> v & 1u)) continue;
    std::uint32_t m = 0;
    for (int w = 0; w < g.n; ++w)
      if ((keep & g.adj[static_cast<size_t>(v)]) >> w & 1u) m |= 1u << pos[static_cast<size_t>(w)];
    out.adj[static_cast<size_t>(pos[static_cast<size_t>(v)])] = m;
  }
  return out;
}

std::uint32_t reach(const SG& g, int start, std::uint32_t allowed) {
  std::uint32_t seen = 1u << start, frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= g.adj[static_cast<size_t>(std::countr_zero(f))];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Smallest adjacency encoding over all relabelings; used for n <= 6.
std::uint64_t canonical_code(const SG& g) {
  std::array<int, 6> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        code = code << 1 | (g.adj[static_cast<size_t>(perm[static_cast<size_t>(i)])] >> perm[static_cast<size_t>(j)] & 1u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
  return best | static_cast<std::uint64_t>(g.n) << 56;
}

class Solver {
 public:
  Poly solve(const SG& g) {
    if (g.n == 0) return Poly{1};
    const int m = g.edges();
    if (m == 0) return q_power(g.n);
    // Components.
    const std::uint32_t comp = reach(g, 0, g.all());
    if (comp != g.all()) return poly_mul(solve(induced(g, comp)), solve(induced(g, g.all() & ~comp)));
    return connected(g, m);
  }

 private:
  Poly connected(const SG& g, int m) {
    if (m == g.n * (g.n - 1) / 2) return falling(g.n);
    bool all_two = m == g.n;
    for (int v = 0; v < g.n && all_two; ++v) all_two = std::popcount(g.adj[static_cast<size_t>(v)]) == 2;
    if (all_two) return cycle_poly(g.n);
    // A cut vertex v splits G into pieces sharing v: P(G) = Π P(piece) / q^(pieces-1).
    for (int v = 0; v < g.n; ++v) {
      const std::uint32_t rest = g.all() & ~(1u << v);
      const int start = std::countr_zero(rest);
      const std::uint32_t part = reach(g, start, rest);
      if (part == rest) continue;
      const Poly a = solve(induced(g, part | 1u << v));
      const Poly b = solve(induced(g, (rest & ~part) | 1u << v));
      return divide_q_power(poly_mul(a, b), 1);
    }
    return memoized(g, m);
  }

  Poly memoized(const SG& g, int m) {
    if (g.n <= 6) {
      const std::uint64_t code = canonical_code(g);
      auto it = small_.find(code);
      if (it != small_.end()) return it->second;
      Poly p = split(g, m);
      small_.emplace(code, p);
      return p;
    }
    auto it = labeled_.find(g);
    if (it != labeled_.end()) return it->second;
    Poly p = split(g, m);
    labeled_.emplace(g, p);
    return p;
  }

  // 2-connected, not complete, not a cycle: every edge lies on a cycle.
  Poly split(const SG& g, int m) {
    int u = 0;
    for (int v = 1; v < g.n; ++v)
      if (std::popcount(g.adj[static_cast<size_t>(v)]) > std::popcount(g.adj[static_cast<size_t>(u)])) u = v;
    if (4 * m > 3 * (g.n * (g.n - 1) / 2)) {
      // Dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv, walking toward K_n.
      const std::uint32_t non = g.all() & ~g.adj[static_cast<size_t>(u)] & ~(1u << u);
      int v = std::countr_zero(non);
      if (non == 0) {
        for (u = 0; u < g.n; ++u) {
          const std::uint32_t nn = g.all() & ~g.adj[static_cast<size_t>(u)] & ~(1u << u);
          if (nn) {
            v = std::countr_zero(nn);
            break;
          }
        }
      }
      SG plus = g;
      plus.adj[static_cast<size_t>(u)] |= 1u << v;
      plus.adj[static_cast<size_t>(v)] |= 1u << u;
      return poly_add(solve(plus), solve(contract(g, u, v)));
    }
    // Sparse: P(G) = P(G - uv) - P(G / uv) with u of maximum degree and v its busiest neighbour.
    int v = -1;
    for (std::uint32_t nb = g.adj[static_cast<size_t>(u)]; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if (v < 0 || std::popcount(g.adj[static_cast<size_t>(w)]) > std::popcount(g.adj[static_cast<size_t>(v)])) v = w;
    }
    SG minus = g;
    minus.adj[static_cast<size_t>(u)] &= ~(1u << v);
    minus.adj[static_cast<size_t>(v)] &= ~(1u << u);
    return poly_sub(solve(minus), solve(contract(g, u, v)));
  }

  std::map<std::uint64_t, Poly> small_;
  std::map<SG, Poly> labeled_;
};

// ---------------------------------------------------------------- roots

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

QPoly qderiv(const QPoly& p) {
  if (p.size() <= 1) return QPoly{0};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

bool qzero(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

// Quotient and remainder of a / b over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  qtrim(a);
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {QPoly{0}, a};
  QPoly q(a.size() - db);
  for (size_t i = a.size(); i-- > db;) {
    const Rational c = a[i] / b.back();
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db > 0 ? db : 1);
  if (db == 0) a[0] = 0;
  qtrim(a);
  qtrim(q);
  return {q, a};
}

QPoly monic(QPoly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!qzero(b)) {
    QPoly r = qdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Yun's algorithm: p = Π f_i^i with f_i square-free and pairwise coprime.
std::vector<std::pair<QPoly, int>> square_free(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly a = monic(p);
  QPoly b = qderiv(a);
  QPoly c = qgcd(a, b);
  QPoly w = qdivmod(a, c).first;
  QPoly y = qdivmod(b, c).first;
  QPoly z = y;
  {
    QPoly dw = qderiv(w);
    for (size_t i = 0; i < z.size() || i < dw.size(); ++i) {
      if (i >= z.size()) z.push_back(0);
      z[i] -= i < dw.size() ? dw[i] : Rational(0);
    }
    qtrim(z);
  }
  for (int i = 1; w.size() > 1; ++i) {
    const QPoly g = qgcd(w, z);
    if (g.size() > 1) out.emplace_back(g, i);
    w = qdivmod(w, g).first;
    y = qdivmod(z, g).first;
    QPoly dw = qderiv(w);
    z = y;
    for (size_t k = 0; k < z.size() || k < dw.size(); ++k) {
      if (k >= z.size()) z.push_back(0);
      z[k] -= k < dw.size() ? dw[k] : Rational(0);
    }
    qtrim(z);
  }
  return out;
}

using Cx = std::complex<long double>;

Cx horner(const std::vector<long double>& c, Cx x) {
  Cx v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

long double horner_abs(const std::vector<long double>& c, long double x) {
  long double v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Aberth-Ehrlich iteration for a square-free polynomial of degree >= 1.
std::vector<Cx> aberth(const QPoly& p) {
  const QPoly mp = monic(p);
  const size_t n = mp.size() - 1;
  std::vector<long double> c(mp.size()), d(n);
  for (size_t i = 0; i < mp.size(); ++i) c[i] = static_cast<long double>(mp[i].get_d());
  for (size_t i = 1; i < mp.size(); ++i) d[i - 1] = c[i] * static_cast<long double>(i);
  if (n == 1) return {Cx(-c[0], 0)};
  long double radius = 0;
  for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1 + radius;  // Cauchy bound
  std::vector<Cx> z(n);
  for (size_t k = 0; k < n; ++k) {
    const long double angle = 2 * 3.14159265358979323846L * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius * 0.5L, angle);
  }
  std::vector<long double> cabs(c.size());
  for (size_t i = 0; i < c.size(); ++i) cabs[i] = std::abs(c[i]);
  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<char> done(n, 0);
  for (int it = 0; it < 2000; ++it) {
    bool all = true;
    for (size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Cx f = horner(c, z[k]);
      // Once |f| is within the rounding error of Horner's rule, further steps are noise.
      const long double noise = 4 * static_cast<long double>(n + 1) * eps * horner_abs(cabs, std::abs(z[k]));
      if (std::abs(f) <= noise) {
        done[k] = 1;
        continue;
      }
      all = false;
      const Cx ratio = f / horner(d, z[k]);
      Cx sum = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != k) sum += Cx(1) / (z[k] - z[j]);
      const Cx step = ratio / (Cx(1) - ratio * sum);
      z[k] -= step;
      if (std::abs(step) <= eps * std::abs(z[k])) done[k] = 1;
    }
    if (all) return z;
  }
  throw std::runtime_error("chromatic root finder did not converge");
}

}  // namespace

Integer ChromaticPolynomial::evaluate(const Integer& q) const {
  Integer v = 0;
  for (size_t i = coefficients.size(); i-- > 0;) v = v * q + coefficients[i];
  return v;
}

std::string ChromaticPolynomial::str() const {
  std::string out;
  for (size_t i = coefficients.size(); i-- > 0;) {
    const Integer& c = coefficients[i];
    if (c == 0) continue;
    const Integer a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1 || i == 0) out += a.get_str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

ChromaticPolynomial chromatic_polynomial(const WeightedMultigraph& g, int cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 16)
    throw std::invalid_argument("chromatic polynomial needs |V| <= " + std::to_string(std::min(cap, 16)) + ", got " +
                                std::to_string(g.vertex_count()));
  SG s;
  s.n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    s.adj[static_cast<size_t>(e.u)] |= 1u << e.v;
    s.adj[static_cast<size_t>(e.v)] |= 1u << e.u;
  }
  Solver solver;
  return ChromaticPolynomial{solver.solve(s)};
}

ChromaticRoots chromatic_roots(const ChromaticPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("chromatic_roots needs degree >= 1");
  ChromaticRoots out;
  Poly rest = p.coefficients;
  // Integer roots of P lie in [0, n-1]; divide each out exactly with its multiplicity.
  for (long r = 0; r < p.degree(); ++r) {
    for (;;) {
      if (rest.size() <= 1) break;
      Integer v = 0;
      for (size_t i = rest.size(); i-- > 0;) v = v * r + rest[i];
      if (v != 0) break;
      Poly q(rest.size() - 1);
      Integer carry = 0;
      for (size_t i = rest.size(); i-- > 1;) {
        carry = carry * r + rest[i];
        q[i - 1] = carry;
      }
      rest = q;
      out.integer_roots.push_back(r);
      out.roots.emplace_back(static_cast<long double>(r), 0);
    }
  }
  if (rest.size() > 1) {
    QPoly qp(rest.begin(), rest.end());
    for (const auto& [factor, mult] : square_free(qp))
      for (const Cx& z : aberth(factor))
        for (int i = 0; i < mult; ++i) out.roots.push_back(z);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (const Cx& z : out.roots) out.max_abs = std::max(out.max_abs, std::abs(z));

  // Residual: rebuild the polynomial from its roots.
  std::vector<Cx> prod{Cx(1)};
  for (const Cx& z : out.roots) {
    std::vector<Cx> next(prod.size() + 1);
    for (size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];
      next[i] -= z * prod[i];
    }
    prod = std::move(next);
  }
  long double scale = 1;
  for (const Integer& c : p.coefficients) scale = std::max(scale, std::abs(static_cast<long double>(c.get_d())));
  for (size_t i = 0; i < prod.size(); ++i) {
    const long double want = static_cast<long double>(p.coefficients[i].get_d());
    out.residual = std::max(out.residual, std::abs(prod[i] - Cx(want)) / scale);
  }
  if (out.residual > kRootResidualTolerance)
    throw std::runtime_error("chromatic root residual " + std::to_string(static_cast<double>(out.residual)) +
                             " above tolerance");
  return out;
}

ExploreResult explore_conjecture8(const ExploreConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("explore8 needs trials >= 1");
  if (cfg.min_vertices < 2 || cfg.max_vertices < cfg.min_vertices || cfg.max_vertices > kChromaticDefaultCap)
    throw std::invalid_argument("explore8 needs 2 <= min vertices <= max vertices <= " +
                                std::to_string(kChromaticDefaultCap));
  std::vector<ExploreRecord> records(static_cast<size_t>(cfg.trials));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(std::max(1, cfg.jobs)));

  auto one = [&](long t) {
    ExploreRecord& rec = records[static_cast<size_t>(t)];
    rec.trial = t;
    rec.trial_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(t));
    Rng rng(rec.trial_seed);
    const auto kind = rng.uniform(0, 5);
    const int n = static_cast<int>(rng.uniform(std::max(3, cfg.min_vertices), cfg.max_vertices));
    if (kind == 0) {
      rec.family = "cycle";
      rec.graph = cycle_graph(n);
    } else if (kind == 1) {
      rec.family = "star";
      rec.graph = star_graph(n - 1);
    } else {
      RandomGraphConfig rc;
      rc.min_vertices = n;
      rc.max_vertices = n;
      rc.max_multiplicity = kind == 2 ? 1 : cfg.max_multiplicity;
      // Unit weights: P_G ignores weights, so only multiplicities should move Lambda.
      rc.weights = {Rational(1)};
      rc.edge_num = static_cast<std::uint64_t>(rng.uniform(1, 3));
      rc.edge_den = 4;
      rec.family = kind == 2 ? "simple" : "multi";
      rec.graph = random_graph(rc, rng);
    }
    rec.Lambda = maxmaxflow(rec.graph);
    rec.Delta = degree_order_stat(rec.graph, 1, Order::Largest);
    rec.Delta2 = degree_order_stat(rec.graph, 2, Order::Largest);
    rec.polynomial = chromatic_polynomial(rec.graph);
    rec.max_abs_root = chromatic_roots(rec.polynomial).max_abs;
  };
  const int jobs = std::max(1, cfg.jobs);
  auto work = [&](int w) {
    try {
      for (long t = w; t < cfg.trials; t += jobs) one(t);
    } catch (...) {
      errors[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExploreResult result;
  std::map<Rational, ExploreSummary> buckets;
  for (const auto& rec : records) {
    ExploreSummary& b = buckets[rec.Lambda];
    b.Lambda = rec.Lambda;
    ++b.count;
    if (rec.Lambda > 0) {
      const long double ratio = rec.max_abs_root / static_cast<long double>(rec.Lambda.get_d());
      if (b.best_trial < 0 || ratio > b.max_ratio) {
        b.max_ratio = ratio;
        b.best_trial = rec.trial;
      }
    }
  }
  for (auto& [lambda, b] : buckets) result.buckets.push_back(b);
  result.records = std::move(records);
  return result;
}

}  // namespace maxmaxflow
