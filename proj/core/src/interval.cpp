#include "maxmaxflow/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxmaxflow {

namespace {

Rational floor_dyadic(const Rational& q, unsigned bits) {
  Integer scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
  Rational out(f);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Rational ceil_dyadic(const Rational& q, unsigned bits) {
  Integer scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
  Rational out(c);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Rational two_pow_neg(unsigned bits) {
  Rational out(1);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

// atanh(x) for rational 0 <= x <= 1/2, by its Taylor series with the geometric tail bound.
RationalInterval atanh_series(const Rational& x, unsigned bits) {
  const unsigned guard = bits + 8;
  const Rational eps = two_pow_neg(guard);
  const Rational x2 = x * x;
  Rational term = x;  // x^(2j+1)
  Rational lo = 0;
  for (unsigned j = 0;; ++j) {
    lo += term / (2 * j + 1);
    lo = floor_dyadic(lo, guard + 8);
    term *= x2;
    term = ceil_dyadic(term, guard + 8);
    // Remaining terms sum to at most term / ((2j+3) (1 - x^2)).
    const Rational tail = term / (Rational(2 * j + 3) * (1 - x2));
    if (tail < eps || term == 0) return RationalInterval(lo - eps, lo + tail + eps).rounded(guard);
  }
}

// atan(1/n) for integer n >= 2, alternating series.
RationalInterval atan_inv(unsigned n, unsigned bits) {
  const unsigned guard = bits + 8;
  const Rational eps = two_pow_neg(guard);
  Rational sum = 0;
  Rational power(1, n);  // (1/n)^(2j+1)
  const Rational step(1, static_cast<unsigned long>(n) * n);
  for (unsigned j = 0;; ++j) {
    const Rational t = power / (2 * j + 1);
    if (t < eps) {
      // The next omitted term bounds the error of an alternating series.
      return RationalInterval(sum - t - eps, sum + t + eps).rounded(guard);
    }
    sum += (j % 2 == 0) ? t : Rational(-t);
    power *= step;
  }
}

}  // namespace

RationalInterval::RationalInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

RationalInterval RationalInterval::rounded(unsigned bits) const {
  return RationalInterval(floor_dyadic(lo_, bits), ceil_dyadic(hi_, bits));
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return RationalInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return RationalInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return RationalInterval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) throw std::domain_error("interval division by an interval containing 0");
  return a * RationalInterval(1 / b.hi_, 1 / b.lo_);
}

std::string RationalInterval::str() const { return "[" + to_string(lo_) + ", " + to_string(hi_) + "]"; }

RationalInterval pow(const RationalInterval& base, unsigned e) {
  RationalInterval out(Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * base;
  return out;
}

RationalInterval ln_enclosure(const Rational& q, unsigned bits) {
  if (q <= 0) throw std::domain_error("ln of a non-positive number");
  if (q == 1) return RationalInterval(Rational(0));
  // ln q = k ln 2 + ln r with r in [1, 2); ln r = 2 atanh((r-1)/(r+1)), and ln 2 = 2 atanh(1/3).
  long k = 0;
  Rational r = q;
  while (r >= 2) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 1);
    ++k;
  }
  while (r < 1) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), 1);
    --k;
  }
  const unsigned b = bits + 8 + 64;
  const RationalInterval two(Rational(2));
  RationalInterval out = two * atanh_series((r - 1) / (r + 1), b);
  if (k != 0) out = out + RationalInterval(Rational(k)) * (two * atanh_series(Rational(1, 3), b));
  return out.rounded(bits + 8);
}

RationalInterval e_enclosure(unsigned bits) {
  const unsigned guard = bits + 8;
  const Rational eps = two_pow_neg(guard);
  Rational sum = 0, term = 1;
  for (unsigned j = 1;; ++j) {
    sum += term;
    term /= j;
    // Tail after adding 1/(j-1)! is at most 2/j!.
    if (2 * term < eps) return RationalInterval(sum, sum + 2 * term).rounded(guard);
  }
}

RationalInterval exp_enclosure(const Rational& q, unsigned bits) {
  if (q == 0) return RationalInterval(Rational(1));
  if (q.get_den() == 1 && q > 0 && q < 100000) {
    const unsigned long n = q.get_num().get_ui();
    // e^n < 2^(2n) and powering multiplies the relative error by at most n < 2^17.
    const unsigned work = bits + 2 * static_cast<unsigned>(n) + 40;
    const RationalInterval e = e_enclosure(work);
    RationalInterval out(Rational(1)), base = e;
    for (unsigned long k = n; k > 0; k >>= 1) {
      if (k & 1) out = (out * base).rounded(work);
      if (k > 1) base = (base * base).rounded(work);
    }
    return out.rounded(bits + 8);
  }
  if (q < 0) return (RationalInterval(Rational(1)) / exp_enclosure(-q, bits + 8)).rounded(bits + 8);
  // Split q = n + f with f in [0,1), then a Taylor series for e^f.
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  const Rational f = q - Rational(n);
  const unsigned guard = bits + 8;
  const Rational eps = two_pow_neg(guard);
  Rational sum = 0, term = 1;
  for (unsigned j = 1;; ++j) {
    sum += term;
    term = term * f / j;
    if (2 * term < eps) {
      RationalInterval ef(sum, sum + 2 * term);
      return (exp_enclosure(Rational(n), bits + 8) * ef).rounded(guard);
    }
  }
}

RationalInterval pi_enclosure(unsigned bits) {
  const unsigned b = bits + 8;
  return (RationalInterval(Rational(16)) * atan_inv(5, b) - RationalInterval(Rational(4)) * atan_inv(239, b))
      .rounded(b);
}

RationalInterval sqrt_enclosure(const RationalInterval& x, unsigned bits) {
  if (x.lo() < 0) throw std::domain_error("sqrt of an interval with negative part");
  const unsigned guard = bits + 8;
  auto scaled = [&](const Rational& q, bool up) {
    // floor/ceil of sqrt(q) * 2^guard
    Integer num = q.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * guard);
    Integer v;
    if (up)
      mpz_cdiv_q(v.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    else
      mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    Integer root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    if (up && root * root < v) root += 1;
    Rational out(root);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), guard);
    return out;
  };
  return RationalInterval(scaled(x.lo(), false), scaled(x.hi(), true));
}

Comparison compare(const RationalInterval& x, const Rational& q) {
  if (x.hi() < q) return Comparison::Less;
  if (x.lo() > q) return Comparison::Greater;
  if (x.lo() == q && x.hi() == q) return Comparison::Equal;
  return Comparison::Undecided;
}

}  // namespace maxmaxflow
