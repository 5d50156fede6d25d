#pragma once

#include "orbchar/character.hpp"
#include "orbchar/qdim.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbchar {

// Even lattice Z alpha with (alpha, alpha) = 2k. Dual cosets are indexed by
// j mod 2k, lambda_j = j alpha / 2k.
class RankOneLattice {
 public:
  explicit RankOneLattice(long k);
  long k() const noexcept { return k_; }
  long norm() const noexcept { return 2 * k_; }
  // representative of j mod 2k in (-k, k]
  long reduce(long j) const;

 private:
  long k_;
};

struct LatticeModuleLabel {
  enum class Kind { coset, plus, minus, half_plus, half_minus, twisted };

  Kind kind = Kind::coset;
  long j = 0;       // coset index
  int s = 0;        // twisted sector 1 or 2
  int parity = 1;   // twisted eigenvalue sign

  static LatticeModuleLabel coset(long j) { return {Kind::coset, j, 0, 1}; }
  static LatticeModuleLabel plus() { return {Kind::plus, 0, 0, 1}; }
  static LatticeModuleLabel minus() { return {Kind::minus, 0, 0, -1}; }
  static LatticeModuleLabel half_coset(int parity) {
    return {parity > 0 ? Kind::half_plus : Kind::half_minus, 0, 0, parity > 0 ? 1 : -1};
  }
  static LatticeModuleLabel twisted(int s, int parity) { return {Kind::twisted, 0, s, parity > 0 ? 1 : -1}; }

  bool operator==(const LatticeModuleLabel&) const = default;

  // coset(j), plus, minus, half+, half-, T1+, T2- ...
  std::string to_string() const;
  static LatticeModuleLabel parse(std::string_view text);
};

// 2k-1 cosets j in (-k, k), the two eigenspaces of V_L and of V_{L+lambda_k},
// and four twisted modules: 2k + 7 labels
std::vector<LatticeModuleLabel> all_labels(const RankOneLattice& lattice);

bool is_valid(const RankOneLattice& lattice, const LatticeModuleLabel& label);

// sum_m q^{k (m + j/2k)^2}, known through q^order. Stored from its leading
// exponent j^2/4k on an integer grid (exponent differences are integers).
QSeries theta_coset(long k, long j, long order);

// factored form; label validity includes the full coset j = k
Character module_character(long k, const LatticeModuleLabel& label, long order);
QSeries char_module(long k, const LatticeModuleLabel& label, long order);

Rational conformal_weight(long k, const LatticeModuleLabel& label);

// quantum dimension over V_L (orbifold = false, cosets only) or over V_L^+
QuantumDim lattice_qdim(long k, const LatticeModuleLabel& label, bool orbifold);

struct IdentityResult {
  bool ok = true;
  std::optional<SeriesDifference> first_failure;
  std::string detail;
};

// ch V_{Z alpha} (k = 1) = sum_{i<T} ch V_{Z nu + i nu/T}, nu = T alpha, k = T^2
IdentityResult coset_sum_identity(long T, long order);

}  // namespace orbchar
