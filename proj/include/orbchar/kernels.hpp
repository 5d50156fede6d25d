#pragma once

// Data-parallel inner loops. Every kernel exists twice with the same
// signature: serial:: is the reference, parallel:: uses OpenMP. The library
// dispatches to parallel::; tests and bench/ compare the two.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace orbchar::kernels {

using Complex = std::complex<double>;

inline bool is_nonzero(const mpq_class& x) { return sgn(x) != 0; }
inline bool is_nonzero(const Complex& x) { return x != Complex(0.0, 0.0); }

template <class T>
std::vector<std::size_t> support(std::span<const T> a) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (is_nonzero(a[i])) idx.push_back(i);
  return idx;
}

// Weight of one class in a Molien-type sum: w * sum_{m} e^{i m theta} q^{m^2}.
struct ClassTerm {
  Complex weight;
  double theta;  // radians
};

namespace serial {

// out[n] = sum_{i+j=n} a[i] b[j] for n < len
template <class T>
std::vector<T> cauchy_product(std::span<const T> a, std::span<const T> b, std::size_t len) {
  std::vector<T> out(len, T(0));
  auto sb = support(b);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (!is_nonzero(a[i])) continue;
    for (std::size_t j : sb) {
      if (i + j >= len) break;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// sum_n c[n] exp(-2 pi y (offset + n/denom))
inline Complex evaluate(std::span<const Complex> c, double y, double offset, long denom) {
  Complex acc(0.0, 0.0);
  const double rate = 2.0 * std::numbers::pi * y;
  for (std::size_t n = 0; n < c.size(); ++n)
    acc += c[n] * std::exp(-rate * (offset + double(n) / double(denom)));
  return acc;
}

// out[t] = sum_c w_c * (t == 0 ? 1 : 2 cos(t theta_c / 2)); the coefficient of
// q^{t^2/4} in sum_c w_c sum_{m in Z/2} e^{i m theta_c} q^{m^2}.
// Odd t (half-integer m) are skipped unless half_integers is set.
inline std::vector<Complex> class_sum(std::span<const ClassTerm> terms, long max_t, bool half_integers) {
  std::vector<Complex> out(std::size_t(max_t + 1), Complex(0.0, 0.0));
  for (long t = 0; t <= max_t; ++t) {
    if (!half_integers && t % 2 != 0) continue;
    Complex acc(0.0, 0.0);
    for (const auto& c : terms)
      acc += c.weight * (t == 0 ? 1.0 : 2.0 * std::cos(double(t) * c.theta / 2.0));
    out[std::size_t(t)] = acc;
  }
  return out;
}

}  // namespace serial

namespace parallel {

// Gather form: each output index is owned by one thread. The sparser operand
// is walked by its support.
template <class T>
std::vector<T> cauchy_product(std::span<const T> a, std::span<const T> b, std::size_t len) {
  auto sa = support(a);
  auto sb = support(b);
  const bool a_sparse = sa.size() <= sb.size();
  const auto& s = a_sparse ? sa : sb;
  std::span<const T> sv = a_sparse ? a : b;
  std::span<const T> dv = a_sparse ? b : a;
  std::vector<T> out(len, T(0));
  const long n_out = long(len);
#pragma omp parallel for schedule(dynamic, 64)
  for (long n = 0; n < n_out; ++n) {
    T acc(0);
    for (std::size_t i : s) {
      if (long(i) > n) break;
      std::size_t j = std::size_t(n) - i;
      if (j < dv.size() && is_nonzero(dv[j])) acc += sv[i] * dv[j];
    }
    out[std::size_t(n)] = acc;
  }
  return out;
}

inline Complex evaluate(std::span<const Complex> c, double y, double offset, long denom) {
  double re = 0.0, im = 0.0;
  const double rate = 2.0 * std::numbers::pi * y;
  const long n_terms = long(c.size());
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (long n = 0; n < n_terms; ++n) {
    Complex v = c[std::size_t(n)] * std::exp(-rate * (offset + double(n) / double(denom)));
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

inline std::vector<Complex> class_sum(std::span<const ClassTerm> terms, long max_t, bool half_integers) {
  std::vector<Complex> out(std::size_t(max_t + 1), Complex(0.0, 0.0));
#pragma omp parallel for schedule(static)
  for (long t = 0; t <= max_t; ++t) {
    if (!half_integers && t % 2 != 0) continue;
    Complex acc(0.0, 0.0);
    for (const auto& c : terms)
      acc += c.weight * (t == 0 ? 1.0 : 2.0 * std::cos(double(t) * c.theta / 2.0));
    out[std::size_t(t)] = acc;
  }
  return out;
}

}  // namespace parallel

}  // namespace orbchar::kernels
