#include "doctest.h"

#include "orbchar/census.hpp"

#include <cmath>

using namespace orbchar;

namespace {

long sum_squares(Algebra a) {
  Rational s = 0;
  for (const auto& e : census(a).entries) {
    const Rational q = Rational(e.qdim.coeff()) * e.qdim.coeff() * e.qdim.radicand();
    s += q;
  }
  return s.get_num().get_si();
}

}  // namespace

TEST_CASE("census sizes") {
  CHECK(census(Algebra::A4).entries.size() == 21);
  CHECK(census(Algebra::S4).entries.size() == 28);
  CHECK(census(Algebra::A5).entries.size() == 37);
  CHECK_FALSE(census(Algebra::A4).complete_under_assumption);
  CHECK(census(Algebra::A5).complete_under_assumption);
}

TEST_CASE("global dimensions close") {
  CHECK(glob_base() == 2);
  CHECK(sum_squares(Algebra::A4) == 12 * 12 * 2);
  CHECK(sum_squares(Algebra::S4) == 24 * 24 * 2);
  CHECK(sum_squares(Algebra::A5) == 60 * 60 * 2);
  for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5}) CHECK(glob(a) == sum_squares(a));
}

TEST_CASE("rank one lattice global dimensions") {
  for (long k = 1; k <= 12; ++k) {
    CHECK(glob_lattice(k, false, QuantumDim(1)) == 2 * k);
    CHECK(glob_lattice(k, true, QuantumDim::sqrt_of(k)) == 4 * 2 * k);
  }
  CHECK(glob_lattice(4, true, QuantumDim(4)) == 80);
}

TEST_CASE("type counts") {
  auto count = [](Algebra a, ModuleType t) {
    long n = 0;
    for (const auto& e : census(a).entries) n += e.type == t;
    return n;
  };
  CHECK(count(Algebra::A4, ModuleType::one) == 7);
  CHECK(count(Algebra::A4, ModuleType::two) == 14);
  CHECK(count(Algebra::S4, ModuleType::one) == 8);
  CHECK(count(Algebra::A5, ModuleType::one) == 9);
  CHECK(count(Algebra::A5, ModuleType::two) == 28);
}

TEST_CASE("lookup by label and alias") {
  const Census& s4 = census(Algebra::S4);
  CHECK(s4.find("M^0").label == "((V_Zbeta^+)^0)^+");
  CHECK(s4.find("M^27").qdim == QuantumDim(12));
  CHECK(qdim_exact(Algebra::A5, "V_{Zmu+1/50mu}") == QuantumDim(12));
  CHECK(qdim_exact(Algebra::A4, "V_{Zbeta+beta/8}") == QuantumDim(6));
  CHECK_THROWS_AS(s4.find("M^5"), std::out_of_range);
  CHECK_THROWS_AS(parse_algebra("A6"), std::invalid_argument);
  CHECK(parse_algebra("S4") == Algebra::S4);
  CHECK(group_order(Algebra::A5) == 60);
  CHECK(cover_name(Algebra::A4) == "cover_A4");
}

TEST_CASE("lattice recipe weights are r^2/4k") {
  for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5})
    for (const auto& e : census(a).entries) {
      const auto* l = std::get_if<LatticeRecipe>(&e.recipe);
      if (!l || l->label.kind != LatticeModuleLabel::Kind::coset) continue;
      CHECK(e.weight == rational(l->label.j * l->label.j, 4 * l->k));
    }
}

TEST_CASE("catalogue checks") {
  for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5}) {
    for (const auto& rep : {weight_check(a, 200), census_shape_check(a), index_rule_check(a), type_one_check(a),
                            pairing_check(a, 60)})
      for (const auto& l : rep.lines) CHECK_MESSAGE(l.ok, to_string(a) << " " << l.name << ": " << l.detail);
  }
  CHECK(stable_count_check(60).ok());
}

TEST_CASE("weight check skips modules beyond the order") {
  const auto r = weight_check(Algebra::A5, 10);
  CHECK(r.ok());
  CHECK(r.lines.front().detail.find("1 beyond") != std::string::npos);
}

TEST_CASE("subgroup lattices") {
  CHECK(subgroup_lattice("K4").k == 4);
  CHECK(subgroup_lattice("K4").orbifold);
  CHECK_FALSE(subgroup_lattice("Z5").orbifold);
  CHECK(subgroup_lattice("D4").k == 16);
  CHECK_THROWS(subgroup_lattice("A4"));
}

TEST_CASE("numeric quantum dimensions converge as y decreases") {
  for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5})
    for (const auto& q : qdim_numeric_all(a, 0.005, 10000))
      CHECK_MESSAGE(std::abs(q.value - q.exact.value()) < 5e-3, to_string(a) << " " << q.label << " " << q.value);
}

TEST_CASE("A4 numeric quantum dimensions are already within 5e-2 at y = 0.02") {
  for (const auto& q : qdim_numeric_all(Algebra::A4, 0.02, 10000))
    CHECK_MESSAGE(std::abs(q.value - q.exact.value()) < 5e-2, q.label);
}

TEST_CASE("at y = 0.02 the S4 and A5 estimates are still far from the limit") {
  // (V+)^0)^- has weight 9; its ratio to the vacuum creeps up to 1 only for small y
  const double v = qdim_numeric(Algebra::S4, "((V_Zbeta^+)^0)^-", 0.02, 10000);
  CHECK(v == doctest::Approx(0.914).epsilon(0.005));
  CHECK(qdim_numeric(Algebra::S4, "((V_Zbeta^+)^0)^-", 0.005, 10000) == doctest::Approx(1.0).epsilon(1e-5));
  const double w = qdim_numeric(Algebra::A5, "V_{Zbeta+3beta/8}", 0.02, 10000);
  CHECK(std::abs(w - 30.0) > 5.0);
}

TEST_CASE("type one A5 qdims recover the cover irrep dimensions") {
  const std::vector<std::string> labels{"T1", "T2^0", "T2^1", "T3^0", "T3^1", "T4^0", "T4^1", "T5", "T6"};
  const std::vector<long> dims{1, 2, 2, 3, 3, 4, 4, 5, 6};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CHECK(qdim_exact(Algebra::A5, labels[i]) == QuantumDim(dims[i]));
    CHECK(qdim_numeric(Algebra::A5, labels[i], 0.005, 10000) == doctest::Approx(double(dims[i])).epsilon(1e-3));
  }
}

TEST_CASE("numeric qdim rejects bad input") {
  CHECK_THROWS(qdim_numeric(Algebra::A4, "V_Zbeta^-", 0.0, 100));
  CHECK_THROWS_AS(qdim_numeric(Algebra::A4, "nope", 0.1, 100), std::out_of_range);
}
