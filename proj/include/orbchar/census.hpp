#pragma once

#include "orbchar/character.hpp"
#include "orbchar/galois.hpp"
#include "orbchar/lattice.hpp"
#include "orbchar/qdim.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orbchar {

enum class Algebra { A4, S4, A5 };

std::string_view to_string(Algebra a);
Algebra parse_algebra(std::string_view text);
// order of the rotation group and name of its binary cover
long group_order(Algebra a);
std::string_view cover_name(Algebra a);

enum class ModuleType { one, two };

struct LatticeRecipe {
  long k;
  LatticeModuleLabel label;
};

struct IsotypicRecipe {
  std::string cover;
  std::string irrep;
};

using Recipe = std::variant<LatticeRecipe, IsotypicRecipe>;

std::string describe(const Recipe& r);

struct CensusEntry {
  std::string label;
  std::string alias;  // table label (M^i, W^{i,T_j,k}, T_i^j) when there is one
  Recipe recipe;
  ModuleType type;
  std::string sector;
  Rational weight;
  QuantumDim qdim;
  std::string notes;
  int table = 0;          // rendering group
  std::string subgroup;   // subgroup census sharing this recipe (index rule), or empty
  std::string partner;    // label of an entry with the same character, or empty
};

struct Census {
  Algebra algebra;
  std::vector<CensusEntry> entries;
  bool complete_under_assumption = false;

  // by label or alias; std::out_of_range if absent
  const CensusEntry& find(std::string_view label) const;
};

const Census& census(Algebra a);

QuantumDim qdim_exact(Algebra a, std::string_view label);

// sum of squared quantum dimensions (always an integer here)
long glob(Algebra a);
// the two V_{L_2}-modules
long glob_base();
// V_L (orbifold = false) or V_L^+ with the twisted modules at the given qdim
long glob_lattice(long k, bool orbifold, QuantumDim twisted_qdim);

// lattice algebra realized as the fixed points of a subgroup of SO(3):
// Z_n -> V_{Z n alpha}, dihedral -> V_{Z n alpha}^+
struct SubgroupLattice {
  long k;
  bool orbifold;
};
SubgroupLattice subgroup_lattice(std::string_view subgroup);

Character entry_character(const CensusEntry& e, long order);

double qdim_numeric(Algebra a, std::string_view label, double y, long order);

struct NumericQdim {
  std::string label;
  double value;
  QuantumDim exact;
};
// every entry at once, sharing one evaluator
std::vector<NumericQdim> qdim_numeric_all(Algebra a, double y, long order);

struct CheckReport {
  std::vector<ReportLine> lines;
  bool ok() const;
};

// catalogued weights against min_exponent of each recipe; entries heavier than
// the order are skipped and counted
CheckReport weight_check(Algebra a, long order);
// entry count, type counts, distinct recipes, weight 0 only for the vacuum, qdim >= 1
CheckReport census_shape_check(Algebra a);
CheckReport index_rule_check(Algebra a);
CheckReport type_one_check(Algebra a);
CheckReport stable_count_check(long order);
CheckReport pairing_check(Algebra a, long order);

}  // namespace orbchar
