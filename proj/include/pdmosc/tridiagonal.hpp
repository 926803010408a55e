#pragma once

// Symmetric tridiagonal eigenvalues by Sturm-sequence bisection and
// eigenvectors by inverse iteration.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace pdmosc::tridiagonal {

/// Number of eigenvalues strictly below x. `diag` has n entries, `off` n-1.
inline int sturm_count(std::span<const double> diag, std::span<const double> off, double x) {
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (std::abs(q) < tiny) q = -tiny;
    q = diag[i] - x - off[i - 1] * off[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

/// Gerschgorin interval enclosing the spectrum.
inline std::pair<double, double> gerschgorin(std::span<const double> diag, std::span<const double> off) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  return {lo - pad, hi + pad};
}

/// Lowest k eigenvalues, ascending.
inline std::vector<double> lowest_eigenvalues(std::span<const double> diag, std::span<const double> off, int k) {
  const int n = static_cast<int>(diag.size());
  if (n == 0 || static_cast<int>(off.size()) != n - 1) throw std::invalid_argument("tridiagonal: bad sizes");
  if (k < 0 || k > n) throw std::invalid_argument("tridiagonal: k out of range");
  const auto [glo, ghi] = gerschgorin(diag, off);
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> out(k);
  double lower = glo;
  for (int j = 0; j < k; ++j) {
    // eigenvalue j is the smallest x with count(x) > j
    double lo = lower, hi = ghi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
      if (sturm_count(diag, off, mid) > j) hi = mid;
      else lo = mid;
    }
    out[j] = 0.5 * (lo + hi);
    lower = lo;
  }
  return out;
}

/// Unit eigenvector for a computed eigenvalue, by inverse iteration.
inline std::vector<double> eigenvector(std::span<const double> diag, std::span<const double> off, double lambda,
                                       int iterations = 3) {
  const std::size_t n = diag.size();
  const double shift = lambda + 8.0 * std::numeric_limits<double>::epsilon() *
                                    std::max(1.0, std::abs(lambda)) * static_cast<double>(n);
  // LU of (T - shift) without pivoting; zero pivots nudged.
  std::vector<double> l(n, 0.0), u(n);
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lambda));
  u[0] = diag[0] - shift;
  if (u[0] == 0.0) u[0] = tiny;
  for (std::size_t i = 1; i < n; ++i) {
    l[i] = off[i - 1] / u[i - 1];
    u[i] = diag[i] - shift - l[i] * off[i - 1];
    if (u[i] == 0.0) u[i] = tiny;
  }
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 1; i < n; ++i) v[i] -= l[i] * v[i - 1];
    v[n - 1] /= u[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) v[i] = (v[i] - off[i] * v[i + 1]) / u[i];
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

}  // namespace pdmosc::tridiagonal
