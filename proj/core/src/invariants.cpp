#include "maxmaxflow/invariants.hpp"

#include <algorithm>

#include "maxmaxflow/flowcut.hpp"

namespace maxmaxflow {

Rational degree_order_stat(const WeightedMultigraph& g, int k, Order order) {
  const int n = g.vertex_count();
  if (k < 1 || k > n)
    throw GraphError("order statistic k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  auto d = weighted_degrees(g);
  std::sort(d.begin(), d.end());
  return order == Order::Smallest ? d[static_cast<size_t>(k - 1)] : d[static_cast<size_t>(n - k)];
}

Rational degeneracy(const WeightedMultigraph& g, std::vector<Vertex>* peel_order) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError("degeneracy of the empty graph");
  auto d = weighted_degrees(g);
  std::vector<char> gone(static_cast<size_t>(n), 0);
  Rational best = -1;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[static_cast<size_t>(v)] && (pick < 0 || d[static_cast<size_t>(v)] < d[static_cast<size_t>(pick)]))
        pick = v;
    best = std::max(best, d[static_cast<size_t>(pick)]);
    gone[static_cast<size_t>(pick)] = 1;
    if (peel_order) peel_order->push_back(pick);
    for (EdgeId e : g.incident(pick)) {
      Vertex u = g.other(e, pick);
      if (!gone[static_cast<size_t>(u)]) d[static_cast<size_t>(u)] -= g.edge(e).w;
    }
  }
  return best;
}

Rational degeneracy_k(const WeightedMultigraph& g, int k, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw GraphError("degeneracy_k: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  if (k < 1) throw GraphError("degeneracy_k needs k >= 1");
  if (k > n) throw GraphError("degeneracy_k needs k <= |V|");
  std::vector<std::vector<Rational>> w(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (const Edge& e : g.edges()) {
    w[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] += e.w;
    w[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] += e.w;
  }
  Rational best = -1;
  std::vector<Vertex> members;
  std::vector<Rational> deg;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (__builtin_popcount(mask) < k) continue;
    members.clear();
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) members.push_back(v);
    deg.assign(members.size(), 0);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        const Rational& x = w[static_cast<size_t>(members[i])][static_cast<size_t>(members[j])];
        if (x != 0) {
          deg[i] += x;
          deg[j] += x;
        }
      }
    std::nth_element(deg.begin(), deg.begin() + (k - 1), deg.end());
    best = std::max(best, deg[static_cast<size_t>(k - 1)]);
  }
  return best;
}

bool InvariantReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const ChainVerdict& v) { return v.holds; });
}

InvariantReport inequality_chain(const WeightedMultigraph& g, const ChainOptions& options) {
  const int n = g.vertex_count();
  if (n < 2) throw GraphError("inequality chain needs at least 2 vertices");
  InvariantReport r;
  r.n = n;
  r.Delta = degree_order_stat(g, 1, Order::Largest);
  r.Delta2 = degree_order_stat(g, 2, Order::Largest);
  r.Delta_n1 = degree_order_stat(g, n - 1, Order::Largest);
  r.delta = degree_order_stat(g, 1, Order::Smallest);
  r.delta2 = degree_order_stat(g, 2, Order::Smallest);
  r.Lambda = maxmaxflow(g);
  if (n <= options.lambda_tilde_cap) r.Lambda_tilde = lambda_tilde_bruteforce(g, options.lambda_tilde_cap);
  r.D = degeneracy(g);
  if (n <= options.degeneracy_cap) r.D2 = degeneracy_k(g, 2, options.degeneracy_cap);

  auto le = [&](std::string name, const Rational& a, const Rational& b) {
    r.verdicts.push_back({std::move(name), a, b, false, a <= b, b - a});
  };
  auto eq = [&](std::string name, const Rational& a, const Rational& b) {
    r.verdicts.push_back({std::move(name), a, b, true, a == b, b - a});
  };
  le("delta <= D", r.delta, r.D);
  le("D <= Lambda", r.D, r.Lambda);
  if (r.Lambda_tilde) eq("Lambda = Lambda~", r.Lambda, *r.Lambda_tilde);
  le("Lambda <= Delta2", r.Lambda, r.Delta2);
  le("Delta2 <= Delta", r.Delta2, r.Delta);
  if (r.D2) {
    le("D2 <= Lambda", *r.D2, r.Lambda);
    le("D <= D2", r.D, *r.D2);
    le("Delta_{n-1} <= D2", r.Delta_n1, *r.D2);
  }
  return r;
}

}  // namespace maxmaxflow
