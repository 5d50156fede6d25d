#pragma once

#include "orbchar/character.hpp"
#include "orbchar/groups.hpp"
#include "orbchar/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbchar {

enum class Sector { integer, half_integer };

// A class-sum coefficient was not within tolerance of an integer.
class RoundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// q^{-1/24} P(q) sum_{m in Z or Z+1/2} e^{i m theta} q^{m^2}, numeric,
// known through q^{order-1/24}
QSeries twisted_trace(const Angle& theta, Sector sector, long order);

// (1/|G|) sum_c |c| conj(chi(c)) sum_m e^{i m theta_c} q^{m^2}, rounded to
// integers. m runs over Z/2 for binary covers (V_{Z alpha/2}) and over Z for
// rotation groups (V_{L_2}). Exact, grid 4.
QSeries isotypic_lattice_factor(const GroupData& g, std::size_t irrep, long order, double tol = 1e-6);

Character isotypic_character(const GroupData& g, std::size_t irrep, long order);
Character isotypic_character(const GroupData& g, std::string_view irrep, long order);

// invariants of a rotation group acting on V_{L_2}
Character molien_character(const GroupData& g, long order);

// sum_chi dim(chi) ch V_chi = ch V_{L_2} + ch V_{L_2 + alpha/2}
IdentityResult regular_decomposition(const GroupData& cover, long order);

struct DecompositionExpectation {
  std::string name;
  std::vector<std::pair<std::string, long>> pieces;  // irrep label, multiplicity
  std::optional<Character> target;                   // nullopt: no independent closed form
  // optional (exponent, value) the combination must have
  std::optional<std::pair<Rational, Rational>> coefficient;
};

struct ReportLine {
  std::string name;
  bool ok;
  std::string detail;
};

struct DecompositionReport {
  std::string cover;
  std::vector<ReportLine> lines;
  bool ok() const;
};

DecompositionReport decomposition_check(const GroupData& cover, const std::vector<DecompositionExpectation>& expected,
                                        long order);

// the lattice and cross-cover identities known for each cover
std::vector<DecompositionExpectation> standard_expectations(std::string_view cover, long order);

// rotation-group invariants of V_{L_2} against their lattice description:
// K4, D_n -> V_{Z n alpha}^+, Z_n -> V_{Z n alpha}; covers' trivial piece against
// the image group
std::vector<ReportLine> molien_cross_checks(long order);

}  // namespace orbchar
