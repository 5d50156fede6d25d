#pragma once
// Reference computations that share no code with the library: explicit
// enumeration, direct summation and restriction of SU(2) characters.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// visit every partition of n (parts nonincreasing)
inline void for_each_partition(long n, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> parts;
  std::function<void(long, long)> rec = [&](long rest, long max_part) {
    if (rest == 0) {
      f(parts);
      return;
    }
    for (long p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline std::vector<long> partition_counts(long n_max) {
  std::vector<long> out;
  for (long n = 0; n <= n_max; ++n) {
    long c = 0;
    for_each_partition(n, [&](const std::vector<long>&) { ++c; });
    out.push_back(c);
  }
  return out;
}

// coefficients of prod (1+q^n)^-1: sum over partitions of (-1)^{#parts}
inline std::vector<long> signed_partition_counts(long n_max) {
  std::vector<long> out;
  for (long n = 0; n <= n_max; ++n) {
    long c = 0;
    for_each_partition(n, [&](const std::vector<long>& p) { c += p.size() % 2 ? -1 : 1; });
    out.push_back(c);
  }
  return out;
}

inline std::vector<long> distinct_part_counts(long n_max) {
  std::vector<long> out;
  for (long n = 0; n <= n_max; ++n) {
    long c = 0;
    for_each_partition(n, [&](const std::vector<long>& p) {
      c += std::adjacent_find(p.begin(), p.end()) == p.end();
    });
    out.push_back(c);
  }
  return out;
}

inline std::vector<long> odd_part_counts(long n_max) {
  std::vector<long> out;
  for (long n = 0; n <= n_max; ++n) {
    long c = 0;
    for_each_partition(n, [&](const std::vector<long>& p) {
      c += std::all_of(p.begin(), p.end(), [](long x) { return x % 2; });
    });
    out.push_back(c);
  }
  return out;
}

// lattice Z alpha, (alpha,alpha) = 2k: points of lambda_j + L with norm/2 = N/(4k),
// returned as a map N -> multiplicity for N <= n_max
inline std::map<long, long> coset_norms(long k, long j, long n_max) {
  std::map<long, long> out;
  // (alpha/2)|m alpha + j alpha/2k|^2 = (2km + j)^2 / 4k
  for (long m = -1000; m <= 1000; ++m) {
    const long v = 2 * k * m + j;
    if (v * v <= n_max) ++out[v * v];
  }
  return out;
}

// coefficient of q^{N/4k - 1/24} in ch V_{L + lambda_j}, N counted in units of 1/4k
inline long lattice_module_coefficient(long k, long j, long N) {
  static const std::vector<long> p = partition_counts(40);
  long c = 0;
  for (const auto& [norm, mult] : coset_norms(k, j, N)) {
    if ((N - norm) % (4 * k) != 0) continue;
    const long n = (N - norm) / (4 * k);
    if (n >= long(p.size())) throw std::out_of_range("oracle partition table too short");
    c += mult * p[std::size_t(n)];
  }
  return c;
}

// spin-j character at rotation angle theta (twice the SU(2) half-angle):
// sum_{m=-j..j} e^{i m theta}, j and m in Z/2
inline std::complex<double> spin_character(long two_j, double theta) {
  std::complex<double> s = 0;
  for (long two_m = -two_j; two_m <= two_j; two_m += 2) s += std::polar(1.0, 0.5 * double(two_m) * theta);
  return s;
}

// multiplicity of an irrep (class sizes, angles, character row) in the
// restriction of spin j
inline long restriction_multiplicity(long two_j, const std::vector<long>& sizes, const std::vector<double>& angles,
                                     const std::vector<std::complex<double>>& row, long order) {
  std::complex<double> s = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c)
    s += double(sizes[c]) * std::conj(row[c]) * spin_character(two_j, angles[c]);
  const double m = s.real() / double(order);
  return std::lround(m);
}

// SU(2) decomposition of the lattice theta sum_m z^{2m} q^{m^2}:
// sum_j chi_j(z) (q^{j^2} - q^{(j+1)^2}). Returns the coefficient of q^{t/4}
// for t = 0..max_t in the isotypic factor of an irrep.
inline std::vector<long> isotypic_theta(const std::vector<long>& sizes, const std::vector<double>& angles,
                                        const std::vector<std::complex<double>>& row, long order, bool half_integers,
                                        long max_t) {
  std::vector<long> out(std::size_t(max_t + 1), 0);
  for (long two_j = 0; two_j * two_j <= max_t; two_j += half_integers ? 1 : 2) {
    const long mult = restriction_multiplicity(two_j, sizes, angles, row, order);
    if (!mult) continue;
    out[std::size_t(two_j * two_j)] += mult;
    const long up = (two_j + 2) * (two_j + 2);
    if (up <= max_t) out[std::size_t(up)] -= mult;
  }
  return out;
}

}  // namespace oracle
