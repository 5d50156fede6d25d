#pragma once

#include "orbchar/qseries.hpp"

#include <array>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

namespace orbchar {

// The four oscillator generating functions that occur at c = 1.
enum class FockKind {
  bosonic,         // prod (1 - q^n)^-1
  bosonic_signed,  // prod (1 + q^n)^-1
  twisted,         // prod (1 - q^{n-1/2})^-1
  twisted_signed,  // prod (1 + q^{n-1/2})^-1
};

std::string_view to_string(FockKind kind);

long fock_grid(FockKind kind);

// known through q^order
QSeries fock_series(FockKind kind, long order, Payload payload = Payload::exact);

struct CharacterTerm {
  Rational coeff;
  FockKind fock;
  QSeries lattice;
};

// q^{-1/24} * sum coeff * fock * lattice, kept factored. Every lattice factor
// is known through q^order, so the expansion is known through q^{order-1/24}.
class Character {
 public:
  explicit Character(long order);

  long order() const noexcept { return order_; }
  std::span<const CharacterTerm> terms() const noexcept { return terms_; }

  Character& add(Rational coeff, FockKind fock, QSeries lattice);
  Character scaled(const Rational& c) const;

  QSeries expand() const;

  friend Character operator+(const Character& a, const Character& b);

 private:
  long order_;
  std::vector<CharacterTerm> terms_;
};

// q^{-c/24} at c = 1
Rational vacuum_shift();

// Evaluates characters at q = e^{-2 pi y}. Each factor is evaluated as its own
// truncated series and the values are multiplied; oscillator values are
// computed once per kind.
class NumericEvaluator {
 public:
  NumericEvaluator(double y, long order);
  NumericEvaluator(const NumericEvaluator&) = delete;
  NumericEvaluator& operator=(const NumericEvaluator&) = delete;

  double y() const noexcept { return y_; }
  long order() const noexcept { return order_; }

  Complex fock(FockKind kind) const;
  Complex operator()(const Character& ch) const;

 private:
  double y_;
  long order_;
  mutable std::array<std::once_flag, 4> once_;
  mutable std::array<Complex, 4> fock_;
};

}  // namespace orbchar
