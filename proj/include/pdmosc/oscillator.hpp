#pragma once

// Closed-form spectrum and eigenfunctions of the radial oscillator with the
// (1 + alpha r^2)^-2 mass, of its Poschl-Teller I image, and of the
// constant-mass limit.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pct.hpp"
#include "specfun.hpp"

namespace pdmosc {

enum class SpectrumSource { closed_form, oracle };

enum class ExtensionType { I, II, III };

/// Rational extension label: type and degree m of the Jacobi seed factor.
struct ExtensionSpec {
  ExtensionType type;
  int m;
  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

struct SpectrumEntry {
  int n;
  double energy;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumTable {
  std::vector<SpectrumEntry> entries;
  SpectrumSource source = SpectrumSource::closed_form;
  ModelParams params{0.0, 0, 1.0};
  std::optional<ExtensionSpec> extension;

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (!(entries[i].energy > entries[i - 1].energy)) return false;
    return true;
  }
  friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;
};

namespace oscillator {

inline constexpr int kMaxLevels = 64;

inline void check_open_quarter(double u, const char* what) {
  if (!(u > 0.0 && u < std::numbers::pi / 2)) throw std::domain_error(std::string(what) + ": u must lie in (0, pi/2)");
}

/// U(u; A, B) = A(A-1) csc^2 u + B(B-1) sec^2 u
inline double pt1_potential(double A, double B, double u) {
  check_open_quarter(u, "pt1_potential");
  const double s = std::sin(u), c = std::cos(u);
  return A * (A - 1.0) / (s * s) + B * (B - 1.0) / (c * c);
}

inline double pt1_energy(double A, double B, int n) {
  if (n < 0) throw std::domain_error("pt1_energy: n must be >= 0");
  const double k = A + B + 2.0 * n;
  return k * k;
}

inline double pt1_log_norm(double A, double B, int n) {
  using specfun::log_gamma;
  return 0.5 * (std::log(2.0 * (A + B + 2.0 * n)) + specfun::log_factorial(n) + log_gamma(A + B + n) -
                log_gamma(A + n + 0.5) - log_gamma(B + n + 0.5));
}

/// Normalized PT I bound state on (0, pi/2).
inline double pt1_wavefunction(double A, double B, int n, double u) {
  if (!(A > 0.5 && B > 0.5)) throw std::domain_error("pt1_wavefunction: need A, B > 1/2");
  if (n < 0) throw std::domain_error("pt1_wavefunction: n must be >= 0");
  check_open_quarter(u, "pt1_wavefunction");
  const Poly P = specfun::jacobi_poly(n, A - 0.5, B - 0.5);
  const double log_pref = pt1_log_norm(A, B, n) + A * std::log(std::sin(u)) + B * std::log(std::cos(u));
  return std::exp(log_pref) * P(std::cos(2.0 * u));
}

/// V(r; L, omega) = L(L+1)/r^2 + omega^2 r^2 / 4. Takes a real L so formal
/// partner parameters can be evaluated too.
inline double potential(double L, double omega, double r) {
  if (!(r > 0.0)) throw std::domain_error("potential: r must be > 0");
  return L * (L + 1.0) / (r * r) + 0.25 * omega * omega * r * r;
}

inline double potential(const ModelParams& p, double r) { return potential(p.L(), p.omega(), r); }

/// E_n for the deformed problem; alpha = 0 gives (2n + L + 3/2) omega.
inline double energy(const ModelParams& p, int n) {
  if (n < 0) throw std::domain_error("energy: n must be >= 0");
  const double a = p.alpha(), L = p.L(), D = p.delta();
  return a * (2.0 * L + 2.5) + (L + 1.5) * D + 4.0 * (a * (L + 1.5) + 0.5 * D) * n + 4.0 * a * n * n;
}

inline double log_norm(const ModelParams& p, int n) {
  using specfun::log_gamma;
  const double L = p.L(), beta = p.jacobi_beta();
  return 0.5 * (std::log(2.0) + (L + 1.5) * std::log(p.alpha()) + specfun::log_factorial(n) +
                std::log(2.0 * n + L + 1.5 + beta) + log_gamma(n + L + 1.5 + beta) - log_gamma(n + L + 1.5) -
                log_gamma(n + 1.0 + beta));
}

/// Normalized eigenfunction of the deformed problem; the polynomial is
/// P_n^{(L+1/2, Delta/(2 alpha))}(t).
class Eigenstate {
 public:
  Eigenstate(const ModelParams& p, int n) : p_(p), n_(n) {
    p.require_deformed("wavefunction");
    if (n < 0) throw std::domain_error("wavefunction: n must be >= 0");
    poly_ = specfun::jacobi_poly(n, p.L() + 0.5, p.jacobi_beta());
    log_norm_ = log_norm(p, n);
    f_exponent_ = -0.5 * (p.L() + 2.5 + p.jacobi_beta());
  }

  double operator()(double r) const {
    if (!(r > 0.0)) throw std::domain_error("wavefunction: r must be > 0");
    const double log_pref = log_norm_ + (p_.L() + 1.0) * std::log(r) + f_exponent_ * std::log1p(p_.alpha() * r * r);
    return std::exp(log_pref) * poly_(pct::t_of_r(p_, r));
  }

  double energy() const { return oscillator::energy(p_, n_); }
  const Poly& poly() const { return poly_; }

 private:
  ModelParams p_;
  int n_;
  Poly poly_;
  double log_norm_ = 0.0;
  double f_exponent_ = 0.0;
};

inline double wavefunction(const ModelParams& p, int n, double r) { return Eigenstate(p, n)(r); }

/// Constant-mass radial oscillator eigenfunction (the alpha -> 0 limit).
inline double limit_wavefunction(int L, double omega, int n, double r) {
  if (!(r > 0.0)) throw std::domain_error("limit_wavefunction: r must be > 0");
  if (n < 0 || L < 0 || !(omega > 0.0)) throw std::domain_error("limit_wavefunction: bad parameters");
  const double log_norm = 0.5 * (L + 1.5) * std::log(0.5 * omega) +
                          0.5 * (std::log(2.0) + specfun::log_factorial(n) - specfun::log_gamma(n + L + 1.5));
  const double rho = 0.5 * omega * r * r;
  const double log_pref = log_norm + (L + 1.0) * std::log(r) - 0.5 * rho;
  return std::exp(log_pref) * specfun::laguerre_poly(n, L + 0.5)(rho);
}

inline SpectrumTable spectrum(const ModelParams& p, int n_max) {
  if (n_max < 0 || n_max > kMaxLevels)
    throw std::domain_error("spectrum: n_max must lie in [0, " + std::to_string(kMaxLevels) + "]");
  SpectrumTable t{{}, SpectrumSource::closed_form, p, std::nullopt};
  for (int n = 0; n <= n_max; ++n) t.entries.push_back({n, energy(p, n)});
  return t;
}

}  // namespace oscillator
}  // namespace pdmosc
