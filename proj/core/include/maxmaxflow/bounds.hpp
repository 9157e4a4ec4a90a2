#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxmaxflow/enumerate.hpp"
#include "maxmaxflow/interval.hpp"

namespace maxmaxflow {

enum class Verdict { Violation, ConsistentUpToM, EqualityAtM };

std::string verdict_name(Verdict v);

// Anchors and parameters shared by all verifiers; each bound reads the fields it needs.
struct BoundContext {
  VertexSet X;
  VertexSet Y;
  Vertex x = -1;
  Vertex y = -1;
  int p = 1;
  int r = 1;
  EdgeId edge = -1;
  Rational alpha = 2;           // prop7.2, prop7.8; must lie in (1,2]
  std::optional<Rational> zeta;  // cor4.5; defaults to 1/(2Λ)
  EnumerationOptions enumeration;
};

enum class BoundShape { Pointwise, GeneratingFunction };

struct BoundInfo {
  std::string id;
  BoundShape shape;
  bool conjecture;
  std::string statement;
};

// Every verifier id, theorems first, then conjectures.
const std::vector<BoundInfo>& bound_catalog();
const BoundInfo& bound_info(const std::string& id);  // throws std::invalid_argument for unknown ids

struct BoundVerdict {
  std::string id;
  std::string discount;             // per-term factor, e.g. "Lambda^-m" or "(ln 2/Delta)^m"
  std::optional<Rational> beta;     // exact discount base when rational: term m is scaled by beta^-m
  int M = 0;
  BoundShape shape = BoundShape::GeneratingFunction;
  Rational partial_sum;             // S_M (pointwise: a_m at decisive_m); lower end when irrational
  std::optional<RationalInterval> enclosure;  // certified enclosure of S_M when it is irrational
  Rational bound;                   // (pointwise: the bound at decisive_m)
  Verdict verdict = Verdict::ConsistentUpToM;
  int decisive_m = -1;              // pointwise: first violating m, else M
  Rational ratio;                   // S_M / bound, lower estimate; 0 when bound is 0
  unsigned precision_bits = 0;      // 0 for exact comparisons
};

// The class and anchors whose series the bound consumes. Edge bounds (cor7.5, cor7.13) use
// kind BlockPath with x,y the ends of ctx.edge and read block_through_edge_counts instead.
SubgraphClassSpec required_spec(const WeightedMultigraph& g, const std::string& id, const BoundContext& ctx);

// The input series for a bound, computed from scratch.
CountSeries series_for(const WeightedMultigraph& g, const std::string& id, const BoundContext& ctx, int M);

// Throws std::invalid_argument if series.spec is not the class the bound needs, and
// std::runtime_error if an irrational comparison stays undecided at kMaxBits.
BoundVerdict verify_bound(const WeightedMultigraph& g, const CountSeries& series, const std::string& id,
                          const BoundContext& ctx);

BoundVerdict evaluate_bound(const WeightedMultigraph& g, const std::string& id, const BoundContext& ctx, int M);

struct SuiteResult {
  std::vector<BoundVerdict> verdicts;
  std::vector<std::pair<std::string, std::string>> skipped;  // id, reason
  bool any_violation() const;
};

// All theorem verifiers (or the listed ids) whose preconditions hold for ctx.
// Edge-subset series are computed in one shared enumeration.
SuiteResult run_suite(const WeightedMultigraph& g, const BoundContext& ctx, int M,
                      const std::vector<std::string>& ids = {});

// Λ with the convention Λ = 0 for fewer than two vertices.
Rational lambda_or_zero(const WeightedMultigraph& g);

}  // namespace maxmaxflow
