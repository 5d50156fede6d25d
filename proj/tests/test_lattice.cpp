#include "doctest.h"
#include "oracles.hpp"

#include "orbchar/lattice.hpp"
#include "orbchar/qdim.hpp"

using namespace orbchar;
using L = LatticeModuleLabel;

TEST_CASE("theta cosets match lattice point enumeration") {
  for (long k = 1; k <= 9; ++k)
    for (long j = -k + 1; j <= k; ++j) {
      const long order = 12;
      const QSeries t = theta_coset(k, j, order);
      const auto norms = oracle::coset_norms(k, j, 4 * k * order);
      for (long N = 0; N <= 4 * k * order; ++N) {
        const auto it = norms.find(N);
        CHECK(t.exact_at(rational(N, 4 * k)) == (it == norms.end() ? 0 : it->second));
      }
    }
}

TEST_CASE("coset characters match the partition-weighted lattice sum") {
  for (long k : {1, 2, 4, 9, 16})
    for (long j : {0L, 1L, k}) {
      const long order = 8;
      const QSeries ch = char_module(k, L::coset(j), order);
      for (long N = 0; N < 4 * k * order; ++N)
        CHECK(ch.exact_at(rational(N, 4 * k) - rational(1, 24)) == oracle::lattice_module_coefficient(k, j, N));
    }
}

TEST_CASE("V_{L_2}: weight one space is sl2") {
  const QSeries v = char_module(1, L::coset(0), 3);
  CHECK(min_exponent(v) == rational(-1, 24));
  CHECK(v.exact_at(rational(23, 24)) == 3);
  // theta fixes e^a + e^-a, negates a(-1) and e^a - e^-a
  CHECK(char_module(1, L::plus(), 3).exact_at(rational(23, 24)) == 1);
  CHECK(char_module(1, L::minus(), 3).exact_at(rational(23, 24)) == 2);
}

TEST_CASE("conformal weights are the leading exponents") {
  for (long k = 1; k <= 9; ++k)
    for (const auto& l : all_labels(RankOneLattice(k))) {
      const QSeries ch = char_module(k, l, k / 4 + 3);
      CHECK(min_exponent(ch) - vacuum_shift() == conformal_weight(k, l));
    }
}

TEST_CASE("weight table k = 4") {
  const long k = 4;
  CHECK(conformal_weight(k, L::plus()) == 0);
  CHECK(conformal_weight(k, L::minus()) == 1);
  for (long r = 1; r < k; ++r) CHECK(conformal_weight(k, L::coset(r)) == rational(r * r, 4 * k));
  CHECK(conformal_weight(k, L::half_coset(1)) == rational(k, 4));
  CHECK(conformal_weight(k, L::half_coset(-1)) == rational(k, 4));
  CHECK(conformal_weight(k, L::twisted(1, 1)) == rational(1, 16));
  CHECK(conformal_weight(k, L::twisted(2, -1)) == rational(9, 16));
}

TEST_CASE("orbifold pieces add up") {
  for (long k : {1, 3, 4}) {
    CHECK_FALSE(first_difference(char_module(k, L::plus(), 10) + char_module(k, L::minus(), 10),
                                 char_module(k, L::coset(0), 10)));
    CHECK_FALSE(first_difference(char_module(k, L::half_coset(1), 10) + char_module(k, L::half_coset(-1), 10),
                                 char_module(k, L::coset(k), 10)));
    CHECK_FALSE(first_difference(char_module(k, L::twisted(1, 1), 10) + char_module(k, L::twisted(1, -1), 10),
                                 char_module(k, L::twisted(2, 1), 10) + char_module(k, L::twisted(2, -1), 10)));
  }
}

TEST_CASE("cosets j and -j share a character") {
  for (long k : {4, 9, 16})
    for (long j = 1; j < k; ++j)
      CHECK_FALSE(first_difference(char_module(k, L::coset(j), 6), char_module(k, L::coset(-j), 6)));
}

TEST_CASE("coset-sum identity") {
  for (long T = 2; T <= 5; ++T) {
    const auto r = coset_sum_identity(T, 200);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("labels") {
  const RankOneLattice lat(4);
  CHECK(all_labels(lat).size() == 15);
  CHECK(lat.reduce(5) == -3);
  CHECK(lat.reduce(-4) == 4);
  CHECK(lat.reduce(8) == 0);
  for (const auto& l : all_labels(lat)) CHECK(L::parse(l.to_string()) == l);
  CHECK(L::parse("3") == L::coset(3));
  CHECK(L::parse("+") == L::plus());
  CHECK(L::parse("T2-") == L::twisted(2, -1));
  CHECK_THROWS(L::parse("T3+"));
  CHECK_FALSE(is_valid(lat, L::coset(5)));
  CHECK_THROWS_AS(char_module(4, L::coset(7), 4), std::invalid_argument);
}

TEST_CASE("quantum dimensions over V_L and V_L^+") {
  CHECK(lattice_qdim(4, L::coset(1), false) == QuantumDim(1));
  CHECK(lattice_qdim(4, L::plus(), true) == QuantumDim(1));
  CHECK(lattice_qdim(4, L::minus(), true) == QuantumDim(1));
  CHECK(lattice_qdim(4, L::coset(1), true) == QuantumDim(2));
  CHECK(lattice_qdim(4, L::twisted(1, 1), true) == QuantumDim(2));
  CHECK(lattice_qdim(8, L::twisted(2, -1), true) == QuantumDim(2, 2));
  CHECK(QuantumDim(1, 12).to_string() == "2*sqrt(3)");
  CHECK(QuantumDim(3, 16) == QuantumDim(12));
  CHECK(QuantumDim::sqrt_of(16).value() == doctest::Approx(4.0));
}
