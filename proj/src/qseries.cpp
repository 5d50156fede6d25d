#include "orbchar/qseries.hpp"

#include "orbchar/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace orbchar {

namespace {

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  if (z.imag() == 0.0)
    os << z.real();
  else
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

void require_same_payload(const QSeries& a, const QSeries& b, const char* op) {
  if (a.payload() != b.payload())
    throw PayloadMismatch(std::string(op) + ": cannot mix exact and numeric payloads");
}

template <class T>
void apply_factor(std::vector<T>& r, std::size_t idx, int sign, int power) {
  const std::size_t top = r.size() - 1;
  for (int rep = 0; rep < std::abs(power); ++rep) {
    if (power > 0) {
      for (std::size_t i = top; i >= idx; --i) {  // idx >= 1, so no wraparound
        if (sign > 0) r[i] += r[i - idx]; else r[i] -= r[i - idx];
        if (i == idx) break;
      }
    } else {
      for (std::size_t i = idx; i <= top; ++i) {
        if (sign > 0) r[i] -= r[i - idx]; else r[i] += r[i - idx];
      }
    }
  }
}

template <class T>
std::vector<T> invert(std::span<const T> a) {
  if (!kernels::is_nonzero(a[0])) throw std::domain_error("series_inv: zero leading coefficient");
  const std::size_t len = a.size();
  std::vector<T> b(len, T(0));
  T a0_inv = T(1) / a[0];
  b[0] = a0_inv;
  auto sa = kernels::support(a);
  for (std::size_t n = 1; n < len; ++n) {
    T s(0);
    for (std::size_t i : sa) {
      if (i == 0) continue;
      if (i > n) break;
      s += a[i] * b[n - i];
    }
    b[n] = -s * a0_inv;
  }
  return b;
}

std::pair<QSeries, QSeries> align(const QSeries& a, const QSeries& b, const char* op) {
  require_same_payload(a, b, op);
  Rational diff = a.offset() - b.offset();
  long grid = lcm(lcm(a.denom(), b.denom()), denominator_long(diff));
  Rational low = a.offset() < b.offset() ? a.offset() : b.offset();
  QSeries ra = a.realigned(low, grid);
  QSeries rb = b.realigned(low, grid);
  long t = std::min(ra.trunc(), rb.trunc());
  return {ra.truncated(t), rb.truncated(t)};
}

}  // namespace

QSeries::QSeries(Rational offset, long denom, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), denom_(denom), coeffs_(std::move(coeffs)) {
  if (denom_ < 1) throw std::invalid_argument("QSeries: denominator must be positive");
  if (size() == 0) throw TruncationError("QSeries: no valid terms");
}

QSeries::QSeries(Rational offset, long denom, std::vector<Complex> coeffs)
    : offset_(std::move(offset)), denom_(denom), coeffs_(std::move(coeffs)) {
  if (denom_ < 1) throw std::invalid_argument("QSeries: denominator must be positive");
  if (size() == 0) throw TruncationError("QSeries: no valid terms");
}

QSeries QSeries::zero(Payload kind, Rational offset, long denom, long trunc) {
  if (trunc < 0) throw TruncationError("QSeries::zero: negative truncation");
  if (kind == Payload::exact)
    return QSeries(std::move(offset), denom, std::vector<Rational>(std::size_t(trunc + 1)));
  return QSeries(std::move(offset), denom, std::vector<Complex>(std::size_t(trunc + 1)));
}

QSeries QSeries::monomial(Rational c, Rational offset, long denom, long trunc) {
  if (trunc < 0) throw TruncationError("QSeries::monomial: negative truncation");
  std::vector<Rational> v(std::size_t(trunc + 1));
  v[0] = std::move(c);
  return QSeries(std::move(offset), denom, std::move(v));
}

std::size_t QSeries::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

Payload QSeries::payload() const noexcept {
  return coeffs_.index() == 0 ? Payload::exact : Payload::numeric;
}

std::span<const Rational> QSeries::exact() const {
  if (!is_exact()) throw PayloadMismatch("QSeries: exact coefficients requested from numeric series");
  return std::get<0>(coeffs_);
}

std::span<const Complex> QSeries::numeric() const {
  if (is_exact()) throw PayloadMismatch("QSeries: numeric coefficients requested from exact series");
  return std::get<1>(coeffs_);
}

bool QSeries::nonzero_at(long n) const {
  return std::visit([n](const auto& v) { return kernels::is_nonzero(v[std::size_t(n)]); }, coeffs_);
}

bool QSeries::is_zero() const {
  for (long n = 0; n <= trunc(); ++n)
    if (nonzero_at(n)) return false;
  return true;
}

namespace {
// grid index of exponent e, or -1 if e is below the offset or off the grid
long grid_index(const QSeries& s, const Rational& e) {
  Rational d = (e - s.offset()) * s.denom();
  if (sgn(d) < 0 || d.get_den() != 1) return -1;
  if (d > s.trunc()) throw TruncationError("QSeries: exponent " + to_string(e) + " beyond valid range");
  return numerator_long(d);
}
}  // namespace

Rational QSeries::exact_at(const Rational& e) const {
  long n = grid_index(*this, e);
  return n < 0 ? Rational(0) : exact()[std::size_t(n)];
}

Complex QSeries::numeric_at(const Rational& e) const {
  long n = grid_index(*this, e);
  if (n < 0) return {0.0, 0.0};
  return is_exact() ? Complex(to_double(exact()[std::size_t(n)]), 0.0) : numeric()[std::size_t(n)];
}

QSeries QSeries::rescaled(long new_denom) const { return realigned(offset_, new_denom); }

QSeries QSeries::realigned(const Rational& new_offset, long new_denom) const {
  if (new_denom < 1 || new_denom % denom_ != 0)
    throw std::invalid_argument("QSeries::realigned: new grid must refine the old one");
  Rational shift = (offset_ - new_offset) * new_denom;
  if (sgn(shift) < 0 || shift.get_den() != 1)
    throw std::invalid_argument("QSeries::realigned: offset not reachable on the new grid");
  const std::size_t s = std::size_t(numerator_long(shift));
  const std::size_t f = std::size_t(new_denom / denom_);
  return std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        V out(s + (v.size() - 1) * f + 1);
        for (std::size_t i = 0; i < v.size(); ++i) out[s + i * f] = v[i];
        return QSeries(new_offset, new_denom, std::move(out));
      },
      coeffs_);
}

QSeries QSeries::truncated(long new_trunc) const {
  if (new_trunc < 0) throw TruncationError("QSeries::truncated: no valid terms");
  if (new_trunc > trunc()) throw TruncationError("QSeries::truncated: cannot extend a truncated series");
  return std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        return QSeries(offset_, denom_, V(v.begin(), v.begin() + new_trunc + 1));
      },
      coeffs_);
}

QSeries QSeries::shifted(const Rational& delta) const {
  QSeries out = *this;
  out.offset_ += delta;
  return out;
}

QSeries QSeries::to_numeric() const {
  if (!is_exact()) return *this;
  const auto& v = std::get<0>(coeffs_);
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Complex(v[i].get_d(), 0.0);
  return QSeries(offset_, denom_, std::move(out));
}

QSeries QSeries::scaled(const Rational& c) const {
  if (!is_exact()) return scaled(Complex(c.get_d(), 0.0));
  std::vector<Rational> out(std::get<0>(coeffs_));
  for (auto& x : out) x *= c;
  return QSeries(offset_, denom_, std::move(out));
}

QSeries QSeries::scaled(const Complex& c) const {
  if (is_exact()) throw PayloadMismatch("QSeries::scaled: complex factor on exact series");
  std::vector<Complex> out(std::get<1>(coeffs_));
  for (auto& x : out) x *= c;
  return QSeries(offset_, denom_, std::move(out));
}

QSeries QSeries::operator-() const {
  return is_exact() ? scaled(Rational(-1)) : scaled(Complex(-1.0, 0.0));
}

std::vector<std::pair<Rational, std::string>> QSeries::terms() const {
  std::vector<std::pair<Rational, std::string>> out;
  for (long n = 0; n <= trunc(); ++n) {
    if (!nonzero_at(n)) continue;
    std::string c = is_exact() ? to_string(exact()[std::size_t(n)]) : format_complex(numeric()[std::size_t(n)]);
    out.emplace_back(exponent(n), std::move(c));
  }
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  auto [ra, rb] = align(a, b, "series_add");
  if (ra.is_exact()) {
    std::vector<Rational> v(ra.exact().begin(), ra.exact().end());
    auto w = rb.exact();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    return QSeries(ra.offset(), ra.denom(), std::move(v));
  }
  std::vector<Complex> v(ra.numeric().begin(), ra.numeric().end());
  auto w = rb.numeric();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  return QSeries(ra.offset(), ra.denom(), std::move(v));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

QSeries series_mul(const QSeries& a, const QSeries& b) {
  require_same_payload(a, b, "series_mul");
  const long grid = lcm(a.denom(), b.denom());
  QSeries ra = a.rescaled(grid);
  QSeries rb = b.rescaled(grid);
  const long t = std::min(ra.trunc(), rb.trunc());
  if (t < 0) throw TruncationError("series_mul: result would have no valid terms");
  const std::size_t len = std::size_t(t + 1);
  Rational off = a.offset() + b.offset();
  if (ra.is_exact())
    return QSeries(off, grid, kernels::parallel::cauchy_product<Rational>(ra.exact(), rb.exact(), len));
  return QSeries(off, grid, kernels::parallel::cauchy_product<Complex>(ra.numeric(), rb.numeric(), len));
}

QSeries series_inv(const QSeries& a) {
  if (a.is_exact()) return QSeries(-a.offset(), a.denom(), invert<Rational>(a.exact()));
  return QSeries(-a.offset(), a.denom(), invert<Complex>(a.numeric()));
}

QSeries product_form(std::span<const ModeFamily> families, long trunc, Payload kind) {
  if (trunc < 0) throw TruncationError("product_form: negative truncation");
  long grid = 1;
  for (const auto& f : families) {
    if (sgn(f.step) == 0) throw std::invalid_argument("product_form: zero step");
    if (sgn(f.step) < 0) throw std::invalid_argument("product_form: negative step");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("product_form: sign must be +1 or -1");
    if (f.power == 0) throw std::invalid_argument("product_form: zero power");
    Rational g = f.half_integer ? Rational(f.step / 2) : f.step;
    grid = lcm(grid, denominator_long(g));
  }
  auto build = [&](auto one) {
    using T = decltype(one);
    std::vector<T> r(std::size_t(trunc + 1), T(0));
    r[0] = one;
    for (const auto& f : families) {
      for (long n = 1;; ++n) {
        Rational e = f.half_integer ? Rational(f.step * rational(2 * n - 1, 2)) : Rational(f.step * n);
        Rational idx = e * grid;
        if (idx > trunc) break;
        apply_factor(r, std::size_t(numerator_long(idx)), f.sign, f.power);
      }
    }
    return r;
  };
  if (kind == Payload::exact) return QSeries(Rational(0), grid, build(Rational(1)));
  std::vector<double> r = build(1.0);
  return QSeries(Rational(0), grid, std::vector<Complex>(r.begin(), r.end()));
}

Complex eval_at(const QSeries& a, double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw std::domain_error("eval_at: y must be a positive real");
  QSeries f = a.to_numeric();
  return kernels::parallel::evaluate(f.numeric(), y, to_double(f.offset()), f.denom());
}

double truncation_bound(const QSeries& a, double y) {
  if (!(y > 0.0)) throw std::domain_error("truncation_bound: y must be a positive real");
  QSeries f = a.to_numeric();
  auto c = f.numeric();
  std::vector<std::size_t> nz;
  for (std::size_t i = c.size(); i-- > 0 && nz.size() < 16;)
    if (std::abs(c[i]) > 0.0) nz.push_back(i);
  if (nz.empty()) return 0.0;
  // growth per grid step over the last few nonzero coefficients
  double rho = 1.0;
  for (std::size_t k = 0; k + 1 < nz.size(); ++k) {
    double r = std::abs(c[nz[k]]) / std::abs(c[nz[k + 1]]);
    rho = std::max(rho, std::pow(r, 1.0 / double(nz[k] - nz[k + 1])));
  }
  const double x = std::exp(-2.0 * std::numbers::pi * y / double(f.denom()));
  if (rho * x >= 1.0) return std::numeric_limits<double>::infinity();
  const double last_exp = to_double(f.exponent(long(nz.front())));
  const double gap = double(c.size() - 1 - nz.front());
  return std::abs(c[nz.front()]) * std::pow(rho, gap) * std::exp(-2.0 * std::numbers::pi * y * last_exp) *
         std::pow(x, gap) * (rho * x) / (1.0 - rho * x);
}

Rational min_exponent(const QSeries& a) {
  for (long n = 0; n <= a.trunc(); ++n)
    if (a.nonzero_at(n)) return a.exponent(n);
  throw std::domain_error("min_exponent: all coefficients vanish");
}

std::optional<SeriesDifference> first_difference(const QSeries& a, const QSeries& b, double tol) {
  auto [ra, rb] = align(a, b, "first_difference");
  for (long n = 0; n <= ra.trunc(); ++n) {
    const std::size_t i = std::size_t(n);
    if (ra.is_exact()) {
      if (ra.exact()[i] != rb.exact()[i])
        return SeriesDifference{ra.exponent(n), to_string(ra.exact()[i]), to_string(rb.exact()[i])};
    } else if (std::abs(ra.numeric()[i] - rb.numeric()[i]) > tol) {
      return SeriesDifference{ra.exponent(n), format_complex(ra.numeric()[i]), format_complex(rb.numeric()[i])};
    }
  }
  return std::nullopt;
}

}  // namespace orbchar
