#include "orbchar/qdim.hpp"

#include <cmath>
#include <stdexcept>

namespace orbchar {

QuantumDim::QuantumDim(long coeff, long radicand) : coeff_(coeff), radicand_(radicand) {
  if (coeff < 0 || radicand < 1) throw std::invalid_argument("QuantumDim: needs coeff >= 0 and radicand >= 1");
  for (long p = 2; p * p <= radicand_; ++p) {
    while (radicand_ % (p * p) == 0) {
      radicand_ /= p * p;
      coeff_ *= p;
    }
  }
}

double QuantumDim::value() const { return double(coeff_) * std::sqrt(double(radicand_)); }

std::string QuantumDim::to_string() const {
  if (radicand_ == 1) return std::to_string(coeff_);
  std::string r = "sqrt(" + std::to_string(radicand_) + ")";
  return coeff_ == 1 ? r : std::to_string(coeff_) + "*" + r;
}

}  // namespace orbchar
