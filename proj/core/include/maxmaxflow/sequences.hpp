#pragma once

#include <string>
#include <vector>

#include "maxmaxflow/interval.hpp"
#include "maxmaxflow/rational.hpp"

namespace maxmaxflow {

// C(m,k) = k(m+k)^(m-1)/m! for m >= 1 and C(0,k) = 1. The expression is a
// polynomial in k, so any rational k is accepted (C(m,0) = δ_{m0} falls out).
Rational C_mk(unsigned m, const Rational& k);
// B(m,k) = (k-1)(2m+k-1)^(m-1)/m! for m >= 1 and B(0,k) = 1.
Rational B_mk(unsigned m, const Rational& k);

// Truncated power series with exact coefficients c_0..c_M.
using PowerSeries = std::vector<Rational>;

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
// exp(f) for f with f_0 = 0.
PowerSeries series_exp(const PowerSeries& f);
// The solution of C(z) = exp(z C(z)) through order M, found by fixed-point iteration.
PowerSeries tree_function_series(unsigned M);
// C(z)^k = exp(k z C(z)), valid for any rational k.
PowerSeries tree_function_power(unsigned M, const Rational& k);

struct IdentityCheck {
  std::string name;
  std::string detail;  // the first failing instance, if any
  long cases = 0;
  bool ok = true;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

// Convolution and translation identities for C and B, the B = 2^m C(m,(k-1)/2)
// link, and the power-series coefficients of C(z)^k, for m <= Mmax, k in ks, z in zs.
IdentityReport verify_identities(unsigned Mmax, const std::vector<Rational>& ks, const std::vector<Rational>& zs);

struct AsymptoticCheck {
  unsigned m = 0;
  Rational k;
  RationalInterval ratio;  // C(m,k) / (e^m m^(-3/2) k e^k / sqrt(2π))
};

// The Stirling-form ratio, enclosed to within 2^-bits.
AsymptoticCheck c_asymptotic_ratio(unsigned m, const Rational& k, unsigned bits = 64);
// The same ratio for B(m,k) against (2e)^m m^(-3/2) (k-1) e^((k-1)/2) / sqrt(8π).
AsymptoticCheck b_asymptotic_ratio(unsigned m, const Rational& k, unsigned bits = 64);

}  // namespace maxmaxflow
