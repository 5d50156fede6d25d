#pragma once

#include "orbchar/rational.hpp"

#include "json.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace orbchar {

// rotation angle as a rational multiple of pi
struct Angle {
  Rational over_pi;
  double radians() const;
  // angle mod 2 pi folded into [0, pi]: the SO(3) conjugacy invariant
  Rational folded() const;
};

struct ConjugacyClass {
  std::string label;
  long size;
  Angle angle;
};

struct Irrep {
  std::string label;
  long dim;
  std::vector<std::complex<double>> row;
};

struct GroupData {
  std::string name;
  long order;
  std::vector<ConjugacyClass> classes;
  std::vector<Irrep> irreps;
  std::string base;  // image group in SO(3) for binary covers, else empty

  bool is_cover() const { return !base.empty(); }
  std::size_t irrep_index(std::string_view label) const;
  std::vector<long> dims() const;
};

const std::vector<std::string>& group_names();
const GroupData& group_data(std::string_view name);

// human-readable violations of the table invariants; empty when the table is sound
std::vector<std::string> validate(const GroupData& g, double tol = 1e-9);

// the cover angle map onto base classes is 2:1 on every fiber
std::vector<std::string> cover_fiber_check(const GroupData& cover, const GroupData& base);

struct SubgroupFact {
  std::string subgroup;
  std::string centralizer;
  std::string normalizer;
  std::string ambient;
};

const std::vector<SubgroupFact>& normalizer_centralizer_facts();

nlohmann::json to_json(const GroupData& g);

}  // namespace orbchar
