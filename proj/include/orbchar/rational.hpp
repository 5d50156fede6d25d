#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbchar {

using Rational = mpq_class;

Rational rational(long num, long den = 1);

// "n" for integers, "n/d" otherwise
std::string to_string(const Rational& r);

Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

long lcm(long a, long b);

// numerator and denominator as machine integers; throws std::overflow_error
long numerator_long(const Rational& r);
long denominator_long(const Rational& r);

// floor(r) as a machine integer
long floor_long(const Rational& r);

}  // namespace orbchar
