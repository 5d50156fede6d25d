#pragma once

#include "orbchar/rational.hpp"

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace orbchar {

using Complex = std::complex<double>;

enum class Payload { exact, numeric };

// Two series with different coefficient kinds met in one operation.
class PayloadMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result would have no valid coefficient.
class TruncationError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Truncated series sum_{n=0}^{trunc} c_n q^{offset + n/denom}.
// Coefficients beyond trunc are unknown, not zero.
class QSeries {
 public:
  QSeries(Rational offset, long denom, std::vector<Rational> coeffs);
  QSeries(Rational offset, long denom, std::vector<Complex> coeffs);

  static QSeries zero(Payload kind, Rational offset, long denom, long trunc);
  // c * q^offset, known to be exactly that through offset + trunc/denom
  static QSeries monomial(Rational c, Rational offset, long denom, long trunc);

  const Rational& offset() const noexcept { return offset_; }
  long denom() const noexcept { return denom_; }
  long trunc() const noexcept { return long(size()) - 1; }
  Payload payload() const noexcept;
  bool is_exact() const noexcept { return payload() == Payload::exact; }

  std::span<const Rational> exact() const;
  std::span<const Complex> numeric() const;

  Rational exponent(long n) const { return offset_ + rational(n, denom_); }
  // last exponent with a known coefficient
  Rational valid_through() const { return exponent(trunc()); }
  bool is_zero() const;
  bool nonzero_at(long n) const;

  // coefficient of q^e; zero between grid points, TruncationError beyond the range
  Rational exact_at(const Rational& e) const;
  Complex numeric_at(const Rational& e) const;

  QSeries rescaled(long new_denom) const;
  // same series written from a lower offset on a grid of new_denom
  QSeries realigned(const Rational& new_offset, long new_denom) const;
  QSeries truncated(long new_trunc) const;
  // multiply by q^delta
  QSeries shifted(const Rational& delta) const;
  QSeries to_numeric() const;
  QSeries scaled(const Rational& c) const;
  QSeries scaled(const Complex& c) const;
  QSeries operator-() const;

  // (exponent, printed coefficient) for nonzero terms, ascending
  std::vector<std::pair<Rational, std::string>> terms() const;

 private:
  std::size_t size() const noexcept;

  Rational offset_;
  long denom_;
  std::variant<std::vector<Rational>, std::vector<Complex>> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);

QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_inv(const QSeries& a);

// prod_{n>=1} (1 + sign q^{e_n})^power with e_n = n*step, or (n - 1/2)*step
// for a half-integer family.
struct ModeFamily {
  Rational step;
  int sign = -1;
  int power = -1;
  bool half_integer = false;
};

// trunc counts steps of the result's denominator (lcm of the mode grids)
QSeries product_form(std::span<const ModeFamily> families, long trunc, Payload kind = Payload::exact);

// sum c_n e^{-2 pi y (offset + n/denom)}; y must be positive
Complex eval_at(const QSeries& a, double y);

// heuristic size of the omitted tail for eval_at: the last coefficient grown
// geometrically at the largest recent coefficient ratio
double truncation_bound(const QSeries& a, double y);

Rational min_exponent(const QSeries& a);

struct SeriesDifference {
  Rational exponent;
  std::string lhs;
  std::string rhs;
};

// first exponent (on the common valid range) where the two series differ;
// exact payloads compare exactly, numeric ones within tol
std::optional<SeriesDifference> first_difference(const QSeries& a, const QSeries& b, double tol = 0.0);

}  // namespace orbchar
