#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace maxmaxflow {

// Exact rational scalar used for every weight, count and bound.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "7", "-3/4", "0.125"; exponent notation is rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// base^e for integer e (negative e allowed when base != 0); 0^0 = 1.
Rational pow(const Rational& base, long e);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Least common multiple of the denominators of all values (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& values);

// Decimal approximation for human-readable output only.
double approx(const Rational& q);

}  // namespace maxmaxflow
