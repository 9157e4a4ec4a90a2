#pragma once

#include <string>

#include "maxmaxflow/rational.hpp"

namespace maxmaxflow {

// Closed interval [lo, hi] with rational endpoints. Operations round outward to
// multiples of 2^-bits so endpoint sizes stay bounded under repeated arithmetic.
class RationalInterval {
 public:
  RationalInterval() = default;
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
  RationalInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }

  // Outward rounding of both endpoints to the dyadic grid 2^-bits.
  RationalInterval rounded(unsigned bits) const;

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  // Throws std::domain_error when b contains 0.
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

  std::string str() const;

 private:
  Rational lo_, hi_;
};

RationalInterval pow(const RationalInterval& base, unsigned e);

// Enclosures of width at most 2^-bits (up to rounding slack).
RationalInterval ln_enclosure(const Rational& q, unsigned bits);  // q > 0
RationalInterval e_enclosure(unsigned bits);
RationalInterval exp_enclosure(const Rational& q, unsigned bits);
RationalInterval pi_enclosure(unsigned bits);
RationalInterval sqrt_enclosure(const RationalInterval& x, unsigned bits);  // x >= 0

enum class Comparison { Less, Equal, Greater, Undecided };

// Orders an enclosure against an exact rational; Equal only for a point interval.
Comparison compare(const RationalInterval& x, const Rational& q);

inline constexpr unsigned kStartBits = 64;
inline constexpr unsigned kMaxBits = 256;

}  // namespace maxmaxflow
