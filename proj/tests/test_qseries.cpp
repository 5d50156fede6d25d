#include "doctest.h"
#include "oracles.hpp"

#include "orbchar/character.hpp"
#include "orbchar/qseries.hpp"

#include <random>

using namespace orbchar;

namespace {

QSeries random_series(std::mt19937& rng, long len) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), off(-3, 3), grid(1, 3);
  std::vector<Rational> c(static_cast<std::size_t>(len));
  for (auto& x : c) x = rational(num(rng), den(rng));
  if (sgn(c[0]) == 0) c[0] = 1;
  return QSeries(rational(off(rng), 2), grid(rng), std::move(c));
}

QSeries one(long trunc) { return QSeries::monomial(Rational(1), Rational(0), 1, trunc); }

}  // namespace

TEST_CASE("partition series matches partition enumeration") {
  const auto p = oracle::partition_counts(30);
  const QSeries P = fock_series(FockKind::bosonic, 30);
  CHECK(P.offset() == 0);
  CHECK(P.valid_through() == 30);
  for (long n = 0; n <= 30; ++n) CHECK(P.exact_at(Rational(n)) == p[std::size_t(n)]);
}

TEST_CASE("signed product matches signed partition enumeration") {
  const auto s = oracle::signed_partition_counts(25);
  ModeFamily f{Rational(1), 1, -1, false};
  const QSeries S = product_form(std::span(&f, 1), 25);
  for (long n = 0; n <= 25; ++n) CHECK(S.exact_at(Rational(n)) == s[std::size_t(n)]);
  // 1 - q + 0 q^2 - q^3 + q^4
  CHECK(S.exact_at(Rational(1)) == -1);
  CHECK(S.exact_at(Rational(2)) == 0);
  CHECK(S.exact_at(Rational(3)) == -1);
  CHECK(S.exact_at(Rational(4)) == 1);
}

TEST_CASE("distinct parts and odd parts") {
  const auto d = oracle::distinct_part_counts(25), o = oracle::odd_part_counts(25);
  CHECK(d == o);
  ModeFamily dist{Rational(1), 1, 1, false}, odd{Rational(2), -1, -1, true};
  const QSeries D = product_form(std::span(&dist, 1), 25), O = product_form(std::span(&odd, 1), 25);
  for (long n = 0; n <= 25; ++n) {
    CHECK(D.exact_at(Rational(n)) == d[std::size_t(n)]);
    CHECK(O.exact_at(Rational(n)) == o[std::size_t(n)]);
  }
}

TEST_CASE("half-integer modes") {
  // prod (1 - q^{n-1/2})^-1: coefficient of q^{t/2} counts partitions of t into odd parts
  ModeFamily f{Rational(1), -1, -1, true};
  const QSeries T = product_form(std::span(&f, 1), 30);
  CHECK(T.denom() == 2);
  const auto o = oracle::odd_part_counts(30);
  for (long t = 0; t <= 30; ++t) CHECK(T.exact_at(rational(t, 2)) == o[std::size_t(t)]);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    const QSeries a = random_series(rng, 12), b = random_series(rng, 9), c = random_series(rng, 15);
    CHECK_FALSE(first_difference(a + b, b + a));
    CHECK_FALSE(first_difference(a * b, b * a));
    CHECK_FALSE(first_difference((a * b) * c, a * (b * c)));
    CHECK_FALSE(first_difference(a * (b + c), a * b + a * c));
    CHECK_FALSE(first_difference((a + b) - b, a));
    CHECK_FALSE(first_difference(a * series_inv(a), one(a.trunc())));
  }
}

TEST_CASE("binary operations keep the tightest truncation") {
  QSeries a(Rational(0), 1, std::vector<Rational>(6, Rational(1)));
  QSeries b(rational(1, 2), 2, std::vector<Rational>(4, Rational(1)));
  CHECK((a + b).valid_through() == rational(2, 1));
  CHECK((a * b).valid_through() == rational(2, 1));  // leading 0 + 1/2, b known through 2
  CHECK((a + b).denom() == 2);
}

TEST_CASE("numeric payload agrees with exact arithmetic") {
  std::mt19937 rng(7);
  const QSeries a = random_series(rng, 20), b = random_series(rng, 20);
  const QSeries ex = (a * b).to_numeric(), nu = a.to_numeric() * b.to_numeric();
  CHECK_FALSE(first_difference(ex, nu, 1e-12));
  const QSeries Pn = fock_series(FockKind::bosonic, 40, Payload::numeric);
  CHECK_FALSE(first_difference(Pn, fock_series(FockKind::bosonic, 40).to_numeric(), 1e-9));
}

TEST_CASE("evaluation against a direct product") {
  const double y = 0.3;
  const QSeries P = fock_series(FockKind::bosonic, 200, Payload::numeric);
  double direct = 1.0;
  for (int n = 1; n < 2000; ++n) direct /= 1.0 - std::exp(-2.0 * M_PI * y * n);
  CHECK(eval_at(P, y).real() == doctest::Approx(direct).epsilon(1e-12));
  CHECK(truncation_bound(P, y) < 1e-12);
}

TEST_CASE("errors") {
  const QSeries a = fock_series(FockKind::bosonic, 5);
  CHECK_THROWS_AS(a + a.to_numeric(), PayloadMismatch);
  CHECK_THROWS_AS(a.exact_at(Rational(6)), TruncationError);
  CHECK(a.exact_at(rational(1, 2)) == 0);
  CHECK_THROWS_AS(eval_at(a.to_numeric(), 0.0), std::domain_error);
  CHECK_THROWS_AS(series_inv(a.shifted(Rational(1)) - a.shifted(Rational(1))), std::domain_error);
  CHECK_THROWS_AS(min_exponent(QSeries::zero(Payload::exact, Rational(0), 1, 4)), std::domain_error);
  ModeFamily bad{Rational(0), -1, -1, false};
  CHECK_THROWS_AS(product_form(std::span(&bad, 1), 4), std::invalid_argument);
}

TEST_CASE("first_difference reports the first mismatch") {
  QSeries a(Rational(0), 1, {Rational(1), Rational(2), Rational(3)});
  QSeries b(Rational(0), 1, {Rational(1), Rational(2), Rational(4)});
  auto d = first_difference(a, b);
  REQUIRE(d);
  CHECK(d->exponent == 2);
  CHECK_FALSE(first_difference(a, a));
}

TEST_CASE("shift, monomial, min_exponent") {
  const QSeries m = QSeries::monomial(Rational(3), rational(1, 16), 2, 4);
  CHECK(min_exponent(m) == rational(1, 16));
  CHECK(m.valid_through() == rational(1, 16) + 2);
  CHECK(min_exponent(m.shifted(vacuum_shift())) == rational(1, 16) - rational(1, 24));
  CHECK(to_string(rational(2, 4)) == "1/2");
}
