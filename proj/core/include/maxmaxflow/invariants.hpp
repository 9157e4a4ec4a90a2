#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxmaxflow/graph.hpp"

namespace maxmaxflow {

enum class Order { Largest, Smallest };

// Δ_k (Largest) or δ_k (Smallest) of the weighted degree multiset; 1 <= k <= n.
Rational degree_order_stat(const WeightedMultigraph& g, int k, Order order);

// D(G,w) by peeling a minimum-degree vertex (smallest id on ties).
Rational degeneracy(const WeightedMultigraph& g, std::vector<Vertex>* peel_order = nullptr);

inline constexpr int kDegeneracyKDefaultCap = 10;

// D_k(G,w): max over induced subgraphs H with |V(H)| >= k of the k-th smallest degree in H.
Rational degeneracy_k(const WeightedMultigraph& g, int k, int cap = kDegeneracyKDefaultCap);

struct ChainVerdict {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool equality = false;  // false: lhs <= rhs, true: lhs == rhs
  bool holds = false;
  Rational slack;  // rhs - lhs
};

struct InvariantReport {
  int n = 0;
  Rational Delta, Delta2, Delta_n1, delta, delta2;
  Rational Lambda;
  std::optional<Rational> Lambda_tilde;
  Rational D;
  std::optional<Rational> D2;
  std::vector<ChainVerdict> verdicts;

  bool all_hold() const;
};

struct ChainOptions {
  int lambda_tilde_cap = 12;
  int degeneracy_cap = kDegeneracyKDefaultCap;
};

InvariantReport inequality_chain(const WeightedMultigraph& g, const ChainOptions& options = {});

}  // namespace maxmaxflow
