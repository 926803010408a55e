#pragma once

// Classical orthogonal polynomials with arbitrary real parameters, stored as
// monomial-basis coefficient lists, plus the gamma-function helpers used by
// the normalization constants.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdmosc {

/// Polynomial in one variable (t, z or rho) with real monomial coefficients.
///
/// Invariant: the leading coefficient is nonzero unless the polynomial is the
/// constant zero, and the degree never exceeds `kMaxDegree`.
class Poly {
 public:
  static constexpr int kMaxDegree = 64;

  Poly() : coeffs_{0.0} {}

  explicit Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
  }

  static Poly constant(double c) { return Poly(std::vector<double>{c}); }

  /// c0 + c1 x
  static Poly linear(double c0, double c1) { return Poly(std::vector<double>{c0, c1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(int k) const { return (k >= 0 && k <= degree()) ? coeffs_[k] : 0.0; }
  double leading() const { return coeffs_.back(); }
  bool is_zero() const { return degree() == 0 && coeffs_[0] == 0.0; }

  double operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (degree() == 0) return Poly();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Poly(std::move(d));
  }

  /// Drops every coefficient above `deg`. Used when cancellation is known to
  /// kill the top terms exactly but leaves round-off behind.
  Poly truncated(int deg) const {
    if (deg >= degree()) return *this;
    return Poly(std::vector<double>(coeffs_.begin(), coeffs_.begin() + deg + 1));
  }

  /// p(c0 + c1 x)
  Poly composed_linear(double c0, double c1) const {
    Poly result;
    const Poly inner = linear(c0, c1);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      result = result * inner;
      result += constant(*it);
    }
    return result;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += o * -1.0; }
  Poly& operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, double s) { return a *= s; }
  friend Poly operator*(double s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (degree() > kMaxDegree)
      throw std::length_error("polynomial degree " + std::to_string(degree()) + " exceeds cap " +
                              std::to_string(kMaxDegree));
  }

  std::vector<double> coeffs_;
};

using PolyRational = Poly;

namespace specfun {

/// binom(x, j) = x (x-1) ... (x-j+1) / j! for real x; zero for j < 0.
inline double generalized_binomial(double x, int j) {
  if (j < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= (x - i) / (i + 1);
  return r;
}

inline void check_degree(int n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative degree");
  if (n > Poly::kMaxDegree)
    throw std::domain_error(std::string(what) + ": degree " + std::to_string(n) + " exceeds cap " +
                            std::to_string(Poly::kMaxDegree));
}

/// Jacobi polynomial P_n^{(a,b)}(z) for arbitrary real a, b.
///
/// Uses the finite sum
///   sum_k binom(n+a, n-k) binom(n+b, k) ((z-1)/2)^k ((z+1)/2)^(n-k),
/// which stays finite for the negative parameters of the seed functions where
/// the three-term recurrence divides by zero. P_{-1} is the zero polynomial.
inline Poly jacobi_poly(int n, double a, double b) {
  if (n == -1) return Poly();
  check_degree(n, "jacobi_poly");
  const Poly zm = Poly::linear(-0.5, 0.5);  // (z-1)/2
  const Poly zp = Poly::linear(0.5, 0.5);   // (z+1)/2

  std::vector<Poly> zm_pow{Poly::constant(1.0)}, zp_pow{Poly::constant(1.0)};
  for (int k = 1; k <= n; ++k) {
    zm_pow.push_back(zm_pow.back() * zm);
    zp_pow.push_back(zp_pow.back() * zp);
  }
  Poly result;
  for (int k = 0; k <= n; ++k) {
    const double w = generalized_binomial(n + a, n - k) * generalized_binomial(n + b, k);
    if (w != 0.0) result += w * (zm_pow[k] * zp_pow[n - k]);
  }
  return result;
}

/// Generalized Laguerre polynomial L_n^{(a)}(x) for real a; L_{-1} = 0.
inline Poly laguerre_poly(int n, double a) {
  if (n == -1) return Poly();
  check_degree(n, "laguerre_poly");
  std::vector<double> c(n + 1);
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    c[k] = ((k % 2) ? -1.0 : 1.0) * generalized_binomial(n + a, n - k) / fact;
  }
  return Poly(std::move(c));
}

/// Coefficientwise derivative.
inline Poly jacobi_deriv(const Poly& p) { return p.derivative(); }

inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("log_gamma: argument must be positive");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

/// log(n!) for integer n >= 0.
inline double log_factorial(int n) { return log_gamma(n + 1.0); }

}  // namespace specfun
}  // namespace pdmosc
