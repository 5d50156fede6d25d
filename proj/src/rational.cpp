#include "orbchar/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace orbchar {

Rational rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("parse_rational: not a rational: " + s);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

long lcm(long a, long b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("lcm: arguments must be positive");
  return std::lcm(a, b);
}

static long checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

long numerator_long(const Rational& r) { return checked(r.get_num()); }
long denominator_long(const Rational& r) { return checked(r.get_den()); }

long floor_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return checked(q);
}

}  // namespace orbchar
