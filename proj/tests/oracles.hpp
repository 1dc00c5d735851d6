#pragma once

// Independent reference computations for the tests. These avoid the library's
// elimination and enumeration code paths on purpose.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <vector>

#include <Eigen/LU>

#include "wrlab/matrix.hpp"

namespace oracle {

using wrlab::Integer;
using wrlab::QuadScalar;
using wrlab::Rational;

// Laplace expansion along the first row.
template <class S>
S det_cofactor(const wrlab::Matrix<S>& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return a(0, 0);
  S total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    wrlab::Matrix<S> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    const S term = a(0, j) * det_cofactor(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline Rational quad_form(const wrlab::Matrix<long>& g, const std::vector<long>& u) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) s += u[i] * g(i, j) * u[j];
  return Rational(s);
}

// All nonzero integer vectors with u^T G u <= bound for an integer Gram. The
// box half-widths come from |u_i| <= sqrt(bound * (G^-1)_ii), evaluated in
// double and padded by one.
inline std::vector<std::vector<long>> box_enumerate(const wrlab::Matrix<long>& g,
                                                    long bound) {
  const Eigen::Index n = g.rows();
  Eigen::MatrixXd gd = g.cast<double>();
  Eigen::MatrixXd gi = gd.inverse();
  std::vector<long> radius(n);
  for (Eigen::Index i = 0; i < n; ++i)
    radius[i] = static_cast<long>(std::floor(std::sqrt(bound * gi(i, i)))) + 1;
  std::vector<std::vector<long>> out;
  std::vector<long> u(n);
  for (Eigen::Index i = 0; i < n; ++i) u[i] = -radius[i];
  while (true) {
    bool nonzero = std::any_of(u.begin(), u.end(), [](long v) { return v != 0; });
    if (nonzero && quad_form(g, u) <= bound) out.push_back(u);
    Eigen::Index k = 0;
    while (k < n && u[k] == radius[k]) {
      u[k] = -radius[k];
      ++k;
    }
    if (k == n) break;
    ++u[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Direct scan for coprime p, q with q < p < q*sqrt2 and 2q^2 - p^2 square.
inline std::vector<std::tuple<long, long, long>> pell_scan(long q_max) {
  std::vector<std::tuple<long, long, long>> out;
  for (long q = 1; q <= q_max; ++q) {
    for (long p = q + 1; 2 * q * q - p * p > 0; ++p) {
      const long t = 2 * q * q - p * p;
      const long d = std::lround(std::sqrt(static_cast<double>(t)));
      long hit = -1;
      for (long c = std::max(0L, d - 2); c <= d + 2; ++c)
        if (c * c == t) hit = c;
      if (hit > 0 && std::gcd(p, q) == 1) out.emplace_back(p, q, hit);
    }
  }
  return out;
}

// Sum over nonzero m in Z of t^(m^2), summed until terms fall below 1e-300.
inline long double theta1_minus_one(long double t) {
  long double s = 0;
  for (long m = 1;; ++m) {
    const long double term = std::pow(t, static_cast<long double>(m) * m);
    s += 2 * term;
    if (term < 1e-300L) break;
  }
  return s;
}

// (theta_Z(t))^n - 1 without cancellation.
inline long double theta_power_minus_one(long double t, int n) {
  return std::expm1(n * std::log1p(theta1_minus_one(t)));
}

}  // namespace oracle
