#include "doctest.h"

#include "orbchar/kernels.hpp"
#include "orbchar/rational.hpp"

#include <random>

using namespace orbchar;
using namespace orbchar::kernels;

TEST_CASE("cauchy product: serial and parallel agree (exact)") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::size_t len : {1u, 7u, 64u, 300u}) {
    std::vector<Rational> a(len), b(len);
    for (std::size_t i = 0; i < len; ++i) {
      a[i] = i % 3 ? Rational(0) : rational(d(rng), 3);
      b[i] = rational(d(rng), 2);
    }
    CHECK(serial::cauchy_product<Rational>(a, b, len) == parallel::cauchy_product<Rational>(a, b, len));
  }
}

TEST_CASE("cauchy product: serial and parallel agree (float)") {
  std::mt19937 rng(2);
  std::normal_distribution<double> d;
  const std::size_t len = 500;
  std::vector<Complex> a(len), b(len);
  for (std::size_t i = 0; i < len; ++i) a[i] = {d(rng), d(rng)}, b[i] = {d(rng), 0.0};
  const auto s = serial::cauchy_product<Complex>(a, b, len), p = parallel::cauchy_product<Complex>(a, b, len);
  for (std::size_t i = 0; i < len; ++i) CHECK(std::abs(s[i] - p[i]) < 1e-9 * (1 + std::abs(s[i])));
}

TEST_CASE("cauchy product of geometric series") {
  std::vector<Rational> g(10, Rational(1));
  const auto sq = parallel::cauchy_product<Rational>(g, g, 10);
  for (std::size_t n = 0; n < 10; ++n) CHECK(sq[n] == long(n + 1));
}

TEST_CASE("evaluate: serial and parallel agree") {
  std::vector<Complex> c(2000);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = {double(i % 7), -double(i % 3)};
  const Complex s = serial::evaluate(c, 0.05, -1.0 / 24.0, 4), p = parallel::evaluate(c, 0.05, -1.0 / 24.0, 4);
  CHECK(std::abs(s - p) < 1e-9 * std::abs(s));
  // single term: e^{-2 pi y offset}
  std::vector<Complex> one{Complex(1.0)};
  CHECK(serial::evaluate(one, 0.1, 0.5, 1).real() == doctest::Approx(std::exp(-2 * M_PI * 0.1 * 0.5)));
}

TEST_CASE("class sums: serial and parallel agree") {
  std::vector<ClassTerm> terms{{Complex(1.0), 0.0}, {Complex(0.5, 0.1), 2 * M_PI / 3}, {Complex(-0.25), M_PI}};
  for (bool half : {false, true}) {
    const auto s = serial::class_sum(terms, 200, half), p = parallel::class_sum(terms, 200, half);
    REQUIRE(s.size() == p.size());
    for (std::size_t t = 0; t < s.size(); ++t) CHECK(std::abs(s[t] - p[t]) < 1e-12);
  }
  // identity class only: 1 at t = 0, 2 elsewhere on the allowed grid
  std::vector<ClassTerm> id{{Complex(1.0), 0.0}};
  const auto v = serial::class_sum(id, 4, false);
  CHECK(v[0].real() == 1.0);
  CHECK(v[2].real() == 2.0);
  CHECK(v[1].real() == 0.0);
}
