#include "orbchar/character.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <numbers>

namespace orbchar {

std::string_view to_string(FockKind kind) {
  switch (kind) {
    case FockKind::bosonic: return "bosonic";
    case FockKind::bosonic_signed: return "bosonic_signed";
    case FockKind::twisted: return "twisted";
    case FockKind::twisted_signed: return "twisted_signed";
  }
  return "?";
}

long fock_grid(FockKind kind) {
  return kind == FockKind::twisted || kind == FockKind::twisted_signed ? 2 : 1;
}

QSeries fock_series(FockKind kind, long order, Payload payload) {
  if (order < 0) throw std::invalid_argument("fock_series: negative order");
  ModeFamily f;
  f.step = Rational(1);
  f.power = -1;
  f.sign = (kind == FockKind::bosonic || kind == FockKind::twisted) ? -1 : 1;
  f.half_integer = fock_grid(kind) == 2;
  return product_form(std::span<const ModeFamily>(&f, 1), order * fock_grid(kind), payload);
}

Character::Character(long order) : order_(order) {
  if (order < 0) throw std::invalid_argument("Character: negative order");
}

Character& Character::add(Rational coeff, FockKind fock, QSeries lattice) {
  if (!lattice.is_exact()) throw PayloadMismatch("Character: lattice factor must be exact");
  if (lattice.denom() % fock_grid(fock) != 0)
    throw std::invalid_argument("Character: lattice grid must refine the oscillator grid");
  if (lattice.exponent(lattice.trunc() + 1) <= order_)
    throw TruncationError("Character: lattice factor not known through the character order");
  terms_.push_back({std::move(coeff), fock, std::move(lattice)});
  return *this;
}

Character Character::scaled(const Rational& c) const {
  Character out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Character operator+(const Character& a, const Character& b) {
  Character out(std::min(a.order_, b.order_));
  out.terms_ = a.terms_;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

QSeries Character::expand() const {
  std::array<std::optional<QSeries>, 4> fock;
  std::optional<QSeries> sum;
  for (const auto& t : terms_) {
    auto& f = fock[std::size_t(t.fock)];
    if (!f) f = fock_series(t.fock, order_);
    QSeries piece = series_mul(*f, t.lattice).scaled(t.coeff);
    sum = sum ? *sum + piece : piece;
  }
  if (!sum) return QSeries::zero(Payload::exact, vacuum_shift(), 1, order_);
  return sum->shifted(vacuum_shift());
}

Rational vacuum_shift() { return rational(-1, 24); }

NumericEvaluator::NumericEvaluator(double y, long order) : y_(y), order_(order) {
  if (!(y > 0.0)) throw std::domain_error("NumericEvaluator: y must be positive");
  if (order < 1) throw std::invalid_argument("NumericEvaluator: order must be positive");
}

Complex NumericEvaluator::fock(FockKind kind) const {
  const std::size_t i = std::size_t(kind);
  std::call_once(once_[i], [&] { fock_[i] = eval_at(fock_series(kind, order_, Payload::numeric), y_); });
  return fock_[i];
}

Complex NumericEvaluator::operator()(const Character& ch) const {
  Complex acc(0.0, 0.0);
  for (const auto& t : ch.terms()) acc += to_double(t.coeff) * fock(t.fock) * eval_at(t.lattice, y_);
  return acc * std::exp(-2.0 * std::numbers::pi * y_ * to_double(vacuum_shift()));
}

}  // namespace orbchar
