#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace posetlab {

using Count = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const Count& value);
// "p/q", or "p" when the denominator is 1.
std::string to_fraction(const Rational& value);
Rational parse_rational(const std::string& text);
Count parse_count(const std::string& text);

Count factorial(int n);
Count binomial(int n, int k);
Count from_u64(std::uint64_t value);

// sgn(x) * x^2, so that comparisons of square roots stay in exact arithmetic.
Rational signed_square(const Rational& x);

}  // namespace posetlab
