#include "doctest.h"
#include "oracles.hpp"

#include "orbchar/galois.hpp"

using namespace orbchar;

namespace {

struct Table {
  std::vector<long> sizes;
  std::vector<double> angles;
};

Table table(const GroupData& g) {
  Table t;
  for (const auto& c : g.classes) {
    t.sizes.push_back(c.size);
    t.angles.push_back(c.angle.radians());
  }
  return t;
}

Rational weight(const GroupData& g, const std::string& irrep, long order) {
  return min_exponent(isotypic_character(g, irrep, order).expand()) - vacuum_shift();
}

}  // namespace

TEST_CASE("isotypic lattice factors match SU(2) restriction") {
  const long order = 40;
  for (const auto& n : group_names()) {
    const auto& g = group_data(n);
    const Table t = table(g);
    for (std::size_t i = 0; i < g.irreps.size(); ++i) {
      const QSeries f = isotypic_lattice_factor(g, i, order);
      const auto ref = oracle::isotypic_theta(t.sizes, t.angles, g.irreps[i].row, g.order, g.is_cover(), 4 * order);
      for (long s = 0; s <= 4 * order; ++s)
        CHECK_MESSAGE(f.exact_at(rational(s, 4)) == ref[std::size_t(s)], n << " " << g.irreps[i].label << " q^" << s
                                                                             << "/4");
    }
  }
}

TEST_CASE("binary icosahedral weights") {
  const auto& g = group_data("cover_A5");
  const std::vector<std::pair<std::string, Rational>> w{
      {"X1", 0},           {"X2^0", rational(1, 4)}, {"X2^1", rational(49, 4)}, {"X3^0", 1},  {"X3^1", 9},
      {"X4^0", 9},         {"X4^1", rational(9, 4)}, {"X5", 4},                 {"X6", rational(25, 4)}};
  for (const auto& [irrep, wt] : w) CHECK_MESSAGE(weight(g, irrep, 16) == wt, irrep);
}

TEST_CASE("binary tetrahedral and octahedral weights") {
  const auto& a = group_data("cover_A4");
  CHECK(weight(a, "U1^0", 8) == 0);
  CHECK(weight(a, "U1^1", 8) == 4);
  CHECK(weight(a, "U3", 8) == 1);
  CHECK(weight(a, "U2^0", 8) == rational(1, 4));
  CHECK(weight(a, "U2^2", 8) == rational(9, 4));
  const auto& s = group_data("cover_S4");
  CHECK(weight(s, "W1^1", 12) == 9);
  CHECK(weight(s, "W2^2", 12) == rational(25, 4));
  CHECK(weight(s, "W4", 12) == rational(9, 4));
}

TEST_CASE("regular decompositions") {
  for (const char* c : {"cover_A4", "cover_S4", "cover_A5"}) {
    const auto r = regular_decomposition(group_data(c), 200);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("isotypic pieces against lattice characters") {
  for (const char* c : {"cover_A4", "cover_S4", "cover_A5"}) {
    const auto rep = decomposition_check(group_data(c), standard_expectations(c, 120), 120);
    for (const auto& l : rep.lines) CHECK_MESSAGE(l.ok, c << " " << l.name << ": " << l.detail);
    CHECK(rep.ok());
  }
}

TEST_CASE("weight one of V_{L_2} is the U3 piece") {
  const QSeries u3 = isotypic_character(group_data("cover_A4"), "U3", 4).expand();
  CHECK(u3.exact_at(rational(23, 24)) == 1);
  CHECK(char_module(1, LatticeModuleLabel::coset(0), 4).exact_at(rational(23, 24)) == 3 * 1);
  CHECK(min_exponent(u3) == rational(23, 24));
}

TEST_CASE("invariants of rotation subgroups") {
  for (const auto& l : molien_cross_checks(120)) CHECK_MESSAGE(l.ok, l.name << ": " << l.detail);
}

TEST_CASE("twisted trace of a half turn") {
  // P(q) (1 - 2q + 2q^4 - ...) q^{-1/24}: coefficient of q^{23/24} is p(1) - 2
  const QSeries t = twisted_trace(Angle{Rational(1)}, Sector::integer, 6);
  CHECK(t.numeric_at(rational(23, 24)).real() == doctest::Approx(-1.0));
  CHECK(t.numeric_at(rational(-1, 24)).real() == doctest::Approx(1.0));
  // p(2) - 2 p(1) = 0, p(4) - 2 p(3) + 2 p(0) = 1
  CHECK(std::abs(t.numeric_at(rational(47, 24))) < 1e-12);
  CHECK(t.numeric_at(rational(95, 24)).real() == doctest::Approx(1.0));
}

TEST_CASE("a bad expectation is reported") {
  DecompositionExpectation wrong{"U1^0 = V_L2", {{"U1^0", 1}}, std::nullopt, std::make_pair(rational(23, 24), Rational(5))};
  const auto rep = decomposition_check(group_data("cover_A4"), {wrong}, 10);
  CHECK_FALSE(rep.ok());
}
