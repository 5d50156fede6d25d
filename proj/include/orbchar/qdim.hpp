#pragma once

#include <string>

namespace orbchar {

// coeff * sqrt(radicand), radicand squarefree
class QuantumDim {
 public:
  QuantumDim() = default;
  QuantumDim(long coeff, long radicand = 1);

  static QuantumDim sqrt_of(long n) { return QuantumDim(1, n); }

  long coeff() const noexcept { return coeff_; }
  long radicand() const noexcept { return radicand_; }
  long squared() const noexcept { return coeff_ * coeff_ * radicand_; }
  double value() const;

  QuantumDim operator*(long n) const { return QuantumDim(coeff_ * n, radicand_); }
  bool operator==(const QuantumDim&) const = default;

  std::string to_string() const;  // "12", "2*sqrt(3)"

 private:
  long coeff_ = 1;
  long radicand_ = 1;
};

}  // namespace orbchar
