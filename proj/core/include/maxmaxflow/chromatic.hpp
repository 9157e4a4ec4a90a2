#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "maxmaxflow/graph.hpp"

namespace maxmaxflow {

// P_G(q) = Σ coefficients[i] q^i, exact integers.
struct ChromaticPolynomial {
  std::vector<Integer> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Integer evaluate(const Integer& q) const;
  std::string str() const;  // "q^3 - 3q^2 + 2q"
  bool operator==(const ChromaticPolynomial& o) const { return coefficients == o.coefficients; }
};

inline constexpr int kChromaticDefaultCap = 14;

// Deletion-contraction on the simple graph underlying G (parallels collapse, weights are ignored),
// factored over components and blocks. Throws std::invalid_argument when |V| > cap.
ChromaticPolynomial chromatic_polynomial(const WeightedMultigraph& g, int cap = kChromaticDefaultCap);

struct ChromaticRoots {
  std::vector<Integer> integer_roots;            // exact, with multiplicity
  std::vector<std::complex<long double>> roots;  // all roots including the integer ones
  long double max_abs = 0;
  long double residual = 0;  // max coefficient error of Π(q - r_i) against P, relative to max |coefficient|
};

inline constexpr long double kRootResidualTolerance = 1e-6L;

// Integer roots are divided out exactly; the rest come from Aberth iteration in long double
// on the square-free part. Throws std::runtime_error on non-convergence or a residual above tolerance.
ChromaticRoots chromatic_roots(const ChromaticPolynomial& p);

struct ExploreConfig {
  long trials = 100;
  std::uint64_t seed = 1;
  int min_vertices = 3;
  int max_vertices = 12;
  int max_multiplicity = 3;
  int jobs = 1;
};

struct ExploreRecord {
  long trial = 0;
  std::uint64_t trial_seed = 0;
  std::string family;
  WeightedMultigraph graph;
  Rational Lambda, Delta, Delta2;
  long double max_abs_root = 0;
  ChromaticPolynomial polynomial;
};

struct ExploreSummary {
  Rational Lambda;
  long count = 0;
  long double max_ratio = 0;  // max over the bucket of max|root| / Λ
  long best_trial = -1;
};

struct ExploreResult {
  std::vector<ExploreRecord> records;
  std::vector<ExploreSummary> buckets;  // one per distinct Λ, ascending
};

ExploreResult explore_conjecture8(const ExploreConfig& config);

}  // namespace maxmaxflow
