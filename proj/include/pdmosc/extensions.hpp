#pragma once

// Rational extensions of the PDM radial oscillator obtained from the type I,
// II and III seeds of the Poschl-Teller I problem: seed functions,
// extended potentials, their spectra, X_m-Jacobi exceptional polynomials,
// eigenfunctions, superpotentials, and the constant-mass (alpha -> 0)
// Laguerre limits.
//
// Notation used throughout: beta = Delta / (2 alpha), t = (1 - alpha r^2) /
// (1 + alpha r^2), rho = omega r^2 / 2. The denominator polynomial p_m of an
// extension with parameters (L, Delta) is
//   type I   : P_m^{(L - 1/2, -beta - 1)}(t)
//   type II  : P_m^{(-L - 3/2, beta - 1)}(t)
//   type III : P_m^{(-L - 3/2, -beta - 1)}(t)
// and shifting Delta by +-2 alpha shifts beta by +-1.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oscillator.hpp"
#include "pct.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "susy.hpp"

namespace pdmosc::ext {

class InvalidExtension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(ExtensionType type) {
  switch (type) {
    case ExtensionType::I: return "I";
    case ExtensionType::II: return "II";
    case ExtensionType::III: return "III";
  }
  return "?";
}

inline std::optional<ExtensionType> parse_type(const std::string& s) {
  if (s == "I") return ExtensionType::I;
  if (s == "II") return ExtensionType::II;
  if (s == "III") return ExtensionType::III;
  return std::nullopt;
}

inline std::string describe(const ExtensionSpec& spec) {
  return "type " + to_string(spec.type) + ", m=" + std::to_string(spec.m);
}

// ---------------------------------------------------------------------------
// Validity

namespace detail {

inline std::optional<std::string> common_violation(const ExtensionSpec& spec) {
  if (spec.m < 0) return "m must be >= 0";
  if (spec.type == ExtensionType::III && spec.m % 2 != 0) return "type III requires m even";
  return std::nullopt;
}

}  // namespace detail

/// Conditions under which the extended potential V_ext(r; L, omega) exists:
///   I: m < beta + 1;  II: m < L + 3/2 and alpha < omega / (2 sqrt 2);
///   III: m < L + 3/2, m < beta + 1, m even.
inline std::optional<std::string> extension_violation(const ExtensionSpec& spec, const ModelParams& p) {
  if (auto v = detail::common_violation(spec)) return v;
  if (!p.deformed()) return "alpha must be > 0";
  const double beta = p.jacobi_beta(), m = spec.m, L = p.L();
  switch (spec.type) {
    case ExtensionType::I:
      if (!(m < beta + 1.0)) return "type I requires m < Delta/(2 alpha) + 1";
      break;
    case ExtensionType::II:
      if (!(m < L + 1.5)) return "type II requires m < L + 3/2";
      if (!(p.alpha() < p.omega() / (2.0 * std::sqrt(2.0)))) return "type II requires alpha < omega / (2 sqrt 2)";
      break;
    case ExtensionType::III:
      if (!(m < L + 1.5)) return "type III requires m < L + 3/2";
      if (!(m < beta + 1.0)) return "type III requires m < Delta/(2 alpha) + 1";
      break;
  }
  return std::nullopt;
}

/// Conditions for the seed chi_m(r; L, omega) at its own parameters:
///   I: m < beta;  II: m < L + 1/2;  III: m < L + 1/2, m < beta, m even.
inline std::optional<std::string> seed_violation(const ExtensionSpec& spec, const ModelParams& p) {
  if (auto v = detail::common_violation(spec)) return v;
  if (!p.deformed()) return "alpha must be > 0";
  const double beta = p.jacobi_beta(), m = spec.m, L = p.L();
  switch (spec.type) {
    case ExtensionType::I:
      if (!(m < beta)) return "type I seed requires m < Delta/(2 alpha)";
      break;
    case ExtensionType::II:
      if (!(m < L + 0.5)) return "type II seed requires m < L + 1/2";
      break;
    case ExtensionType::III:
      if (!(m < L + 0.5)) return "type III seed requires m < L + 1/2";
      if (!(m < beta)) return "type III seed requires m < Delta/(2 alpha)";
      break;
  }
  return std::nullopt;
}

inline void require_extension(const ExtensionSpec& spec, const ModelParams& p) {
  if (auto v = extension_violation(spec, p)) throw InvalidExtension("invalid extension (" + describe(spec) + "): " + *v);
}

inline void require_seed(const ExtensionSpec& spec, const ModelParams& p) {
  if (auto v = seed_violation(spec, p)) throw InvalidExtension("invalid seed (" + describe(spec) + "): " + *v);
}

// ---------------------------------------------------------------------------
// SUSY partner of an extension

/// V0 = V(r; L', omega') is the conventional partner of V_ext + gamma.
/// For type I with L = 0 the partner has L' = -1 and is only formal.
struct Partner {
  int L;
  double omega;
  double gamma;
};

inline Partner partner(const ExtensionSpec& spec, const ModelParams& p) {
  require_extension(spec, p);
  const double a = p.alpha(), D = p.delta(), w2 = p.omega() * p.omega(), L = p.L();
  switch (spec.type) {
    case ExtensionType::I:
      return {p.L() - 1, std::sqrt(w2 + 4.0 * a * a + 4.0 * a * D), a * (2.0 * L - 1.0) - D};
    case ExtensionType::II:
      return {p.L() + 1, std::sqrt(w2 + 4.0 * a * a - 4.0 * a * D), -a * (2.0 * L + 3.0) + D};
    case ExtensionType::III:
      return {p.L() + 1, std::sqrt(w2 + 4.0 * a * a + 4.0 * a * D), -a * (2.0 * L + 3.0) - D};
  }
  throw std::logic_error("unreachable");
}

/// Partner parameters as a ModelParams; throws for the formal L' = -1 case.
inline ModelParams partner_params(const ExtensionSpec& spec, const ModelParams& p) {
  const Partner q = partner(spec, p);
  if (q.L < 0)
    throw InvalidExtension("invalid extension (" + describe(spec) + "): partner has L' = -1 (type I with L = 0)");
  return ModelParams(p.alpha(), q.L, q.omega);
}

// ---------------------------------------------------------------------------
// Denominator polynomials

namespace detail {

/// p_m for real L and beta (so shifted parameter sets can be formed).
inline Poly denominator(ExtensionType type, int m, double L, double beta) {
  switch (type) {
    case ExtensionType::I: return specfun::jacobi_poly(m, L - 0.5, -beta - 1.0);
    case ExtensionType::II: return specfun::jacobi_poly(m, -L - 1.5, beta - 1.0);
    case ExtensionType::III: return specfun::jacobi_poly(m, -L - 1.5, -beta - 1.0);
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

/// p_m^{(L, Delta)}(t)
inline Poly denominator_poly(const ExtensionSpec& spec, const ModelParams& p) {
  require_extension(spec, p);
  return detail::denominator(spec.type, spec.m, p.L(), p.jacobi_beta());
}

// ---------------------------------------------------------------------------
// Seeds

/// chi(r) = r^r_power f^f_power poly(t), with its factorization energy.
struct SeedFunction {
  ExtensionSpec spec;
  ModelParams params;
  double energy;
  Poly poly;
  double r_power;
  double f_power;

  double operator()(double r) const {
    if (!(r > 0.0)) throw std::domain_error("seed_function: r must be > 0");
    return std::pow(r, r_power) * std::pow(pct::deforming_f(params, r), f_power) * poly(pct::t_of_r(params, r));
  }

  /// d/dr log |chi|
  double log_derivative(double r) const {
    const double t = pct::t_of_r(params, r);
    const double f = pct::deforming_f(params, r);
    return r_power / r + f_power * pct::deforming_f_prime(params, r) / f +
           poly.derivative()(t) / poly(t) * pct::t_prime(params, r);
  }
};

inline double seed_energy(const ExtensionSpec& spec, const ModelParams& p) {
  require_seed(spec, p);
  const double a = p.alpha(), L = p.L(), D = p.delta(), m = spec.m;
  switch (spec.type) {
    case ExtensionType::I:
      return a * (2.0 * L + 2.5) - (L + 1.5) * D + 4.0 * (a * (L + 1.5) - 0.5 * D) * m + 4.0 * a * m * m;
    case ExtensionType::II:
      return a * (-2.0 * L + 0.5) - (L - 0.5) * D + 4.0 * (a * (-L + 0.5) + 0.5 * D) * m + 4.0 * a * m * m;
    case ExtensionType::III:
      return a * (-2.0 * L + 0.5) + (L - 0.5) * D + 4.0 * (a * (-L + 0.5) - 0.5 * D) * m + 4.0 * a * m * m;
  }
  throw std::logic_error("unreachable");
}

inline SeedFunction make_seed(const ExtensionSpec& spec, const ModelParams& p) {
  require_seed(spec, p);
  const double L = p.L(), beta = p.jacobi_beta();
  const int m = spec.m;
  switch (spec.type) {
    case ExtensionType::I:
      return {spec, p, seed_energy(spec, p), specfun::jacobi_poly(m, L + 0.5, -beta), L + 1.0,
              -0.5 * (L + 2.5 - beta)};
    case ExtensionType::II:
      return {spec, p, seed_energy(spec, p), specfun::jacobi_poly(m, -L - 0.5, beta), -L, -0.5 * (-L + 1.5 + beta)};
    case ExtensionType::III:
      return {spec, p, seed_energy(spec, p), specfun::jacobi_poly(m, -L - 0.5, -beta), -L, -0.5 * (-L + 1.5 - beta)};
  }
  throw std::logic_error("unreachable");
}

inline double seed_function(const ExtensionSpec& spec, const ModelParams& p, double r) { return make_seed(spec, p)(r); }

/// Superpotential -f d/dr log chi_m(r; L', omega') - f'/2 built on the seed
/// at the partner parameters of the extension (L, omega).
inline double seed_superpotential(const ExtensionSpec& spec, const ModelParams& p, double r) {
  const SeedFunction chi = make_seed(spec, partner_params(spec, p));
  return -pct::deforming_f(p, r) * chi.log_derivative(r) - 0.5 * pct::deforming_f_prime(p, r);
}

// ---------------------------------------------------------------------------
// Extended potentials

namespace detail {

// 8 alpha { t p'/p - (1 - t^2) [p''/p - (p'/p)^2] }, dots in t.
inline double rational_term_from(const Poly& p, double alpha, double t) {
  const Poly d1 = p.derivative();
  const double P = p(t), q1 = d1(t) / P, q2 = d1.derivative()(t) / P;
  return 8.0 * alpha * (t * q1 - (1.0 - t * t) * (q2 - q1 * q1));
}

}  // namespace detail

inline double rational_term(const ExtensionSpec& spec, const ModelParams& p, double r) {
  const Poly den = denominator_poly(spec, p);
  return detail::rational_term_from(den, p.alpha(), pct::t_of_r(p, r));
}

/// V_ext = V + V_rat. The partner shift gamma is not included; see partner().
inline double extended_potential(const ExtensionSpec& spec, const ModelParams& p, double r) {
  return oscillator::potential(p, r) + rational_term(spec, p, r);
}

/// Precomputed extended potential, for sampling on grids.
class ExtendedPotential {
 public:
  ExtendedPotential(const ExtensionSpec& spec, const ModelParams& p)
      : p_(p), den_(denominator_poly(spec, p)), partner_(partner(spec, p)) {}

  double operator()(double r) const {
    return oscillator::potential(p_, r) + detail::rational_term_from(den_, p_.alpha(), pct::t_of_r(p_, r));
  }
  double gamma() const { return partner_.gamma; }
  const Partner& partner_data() const { return partner_; }

 private:
  ModelParams p_;
  Poly den_;
  Partner partner_;
};

// ---------------------------------------------------------------------------
// Spectrum

inline void require_level(const ExtensionSpec& spec, int n) {
  const bool ok = n >= 0 || (spec.type == ExtensionType::III && n == -spec.m - 1);
  if (!ok)
    throw InvalidExtension("invalid level n=" + std::to_string(n) + " for " + describe(spec) +
                           (spec.type == ExtensionType::III ? " (allowed: -m-1, 0, 1, ...)" : " (allowed: n >= 0)"));
}

inline double extended_energy(const ExtensionSpec& spec, const ModelParams& p, int n) {
  require_extension(spec, p);
  require_level(spec, n);
  if (spec.type != ExtensionType::III) return oscillator::energy(p, n);
  const double a = p.alpha(), L = p.L(), D = p.delta();
  return a * (6.0 * L + 12.5) + (L + 3.5) * D + 4.0 * (a * (L + 3.5) + 0.5 * D) * n + 4.0 * a * n * n;
}

/// Levels n = 0..n_max, preceded by n = -m-1 for type III.
inline SpectrumTable extended_spectrum(const ExtensionSpec& spec, const ModelParams& p, int n_max) {
  if (n_max < 0 || n_max > oscillator::kMaxLevels)
    throw std::domain_error("extended_spectrum: n_max must lie in [0, " + std::to_string(oscillator::kMaxLevels) + "]");
  SpectrumTable t{{}, SpectrumSource::closed_form, p, spec};
  if (spec.type == ExtensionType::III) t.entries.push_back({-spec.m - 1, extended_energy(spec, p, -spec.m - 1)});
  for (int n = 0; n <= n_max; ++n) t.entries.push_back({n, extended_energy(spec, p, n)});
  return t;
}

// ---------------------------------------------------------------------------
// Exceptional polynomials

/// Q_n^{(m)}(t; L, omega); the constant 1 for type III with n = -m-1.
/// Degree m + n for types I and II, m + n + 1 for type III.
inline Poly eop_polynomial(const ExtensionSpec& spec, const ModelParams& p, int n) {
  require_extension(spec, p);
  require_level(spec, n);
  if (n < 0) return Poly::constant(1.0);
  using specfun::jacobi_poly;
  const int m = spec.m;
  const double L = p.L(), beta = p.jacobi_beta();
  const Poly pm = detail::denominator(spec.type, m, L, beta);
  Poly q;
  int degree = m + n;
  switch (spec.type) {
    case ExtensionType::I: {
      const Poly pm1 = detail::denominator(spec.type, m - 1, L + 1.0, beta - 1.0);
      const Poly Pn = jacobi_poly(n, L - 0.5, 1.0 + beta);
      const Poly bracket = (n + L + 1.5 + beta) * (pm * jacobi_poly(n - 1, L + 0.5, 2.0 + beta)) -
                           (m + L - 0.5 - beta) * (pm1 * Pn);
      q = (beta + 1.0) * (pm * Pn) + Poly::linear(0.5, 0.5) * bracket;
      break;
    }
    case ExtensionType::II: {
      const Poly pm1 = detail::denominator(spec.type, m - 1, L - 1.0, beta + 1.0);
      const Poly Pn = jacobi_poly(n, L + 1.5, beta - 1.0);
      const Poly bracket = (n + L + 1.5 + beta) * (pm * jacobi_poly(n - 1, L + 2.5, beta)) -
                           (m - L - 1.5 + beta) * (pm1 * Pn);
      q = -(L + 1.5) * (pm * Pn) + Poly::linear(0.5, -0.5) * bracket;
      break;
    }
    case ExtensionType::III: {
      const Poly pm1 = detail::denominator(spec.type, m - 1, L - 1.0, beta - 1.0);
      const Poly Pn = jacobi_poly(n, L + 1.5, 1.0 + beta);
      const Poly bracket = (n + L + 3.5 + beta) * (pm * jacobi_poly(n - 1, L + 2.5, 2.0 + beta)) -
                           (m - L - 1.5 - beta) * (pm1 * Pn);
      q = Poly::linear(-(L + 0.5 - beta), -(L + 2.5 + beta)) * (pm * Pn) +
          Poly(std::vector<double>{0.5, 0.0, -0.5}) * bracket;
      degree = m + n + 1;
      break;
    }
  }
  // The (1 +- t) bracket terms cancel one degree above the true degree.
  return q.truncated(degree);
}

// ---------------------------------------------------------------------------
// m = 1 type I closed forms (X_1-Jacobi)

/// X_1-Jacobi polynomial hat P_{n+1}^{(L+1/2, beta)} as a polynomial in t,
/// through hat P_{n+1} = -Q_n / ((L + 1/2 - beta)(n + beta)).
inline Poly x1_jacobi(const ModelParams& p, int n) {
  const ExtensionSpec spec{ExtensionType::I, 1};
  const double k = p.L() + 0.5 - p.jacobi_beta();
  if (std::abs(k) < 1e-12) throw InvalidExtension("x1_jacobi: undefined for Delta/(2 alpha) = L + 1/2");
  return eop_polynomial(spec, p, n) * (-1.0 / (k * (n + p.jacobi_beta())));
}

/// log of the closed-form normalization constant of the m = 1 type I states
///   psi_n = N r^{L+1} f^{-(L + 1/2 + beta)/2} hat P_{n+1}(t) / (2L + 1 + Delta r^2).
inline double x1_log_norm(const ModelParams& p, int n) {
  using specfun::log_gamma;
  const double L = p.L(), beta = p.jacobi_beta(), k = L + 0.5 - beta;
  return 0.5 * (std::log(8.0) + (L + 1.5) * std::log(p.alpha()) + 2.0 * std::log(std::abs(k)) +
                std::log(L + 1.5 + beta + 2.0 * n) + specfun::log_factorial(n) + log_gamma(L + 1.5 + beta + n) -
                std::log(L + 1.5 + n) - std::log(n + 1.0 + beta) - log_gamma(L + 0.5 + n) - log_gamma(n + beta));
}

// ---------------------------------------------------------------------------
// Extended eigenfunctions

enum class Normalization { automatic, quadrature, closed_form };

/// psi_n^{ext} = C psi_0(r; L, omega) Q_n(t) / p_m(t), with C fixed by unit
/// norm and psi > 0 near the origin.
class ExtendedEigenstate {
 public:
  ExtendedEigenstate(const ExtensionSpec& spec, const ModelParams& p, int n,
                     Normalization mode = Normalization::automatic)
      : spec_(spec), p_(p), n_(n), ground_(p, 0) {
    require_extension(spec, p);
    require_level(spec, n);
    q_ = eop_polynomial(spec, p, n);
    den_ = denominator_poly(spec, p);
    energy_ = extended_energy(spec, p, n);

    const bool closed_ok = spec.type == ExtensionType::I && spec.m == 1 &&
                           std::abs(p.L() + 0.5 - p.jacobi_beta()) > 1e-12;
    if (mode == Normalization::closed_form && !closed_ok)
      throw InvalidExtension("closed-form normalization exists only for type I, m = 1");
    const bool use_closed = mode == Normalization::closed_form || (mode == Normalization::automatic && closed_ok);

    // sign convention: positive as r -> 0, where t -> 1
    double q1 = q_(1.0), d1 = den_(1.0);
    if (q1 == 0.0) q1 = q_(1.0 - 1e-6);
    const double sign = (q1 / d1 > 0.0) ? 1.0 : -1.0;

    if (use_closed) {
      // p_1 = (2L + 1 + Delta r^2) / (2 f), so psi_0 Q / p_1 matches the
      // closed form up to N_ext hat/Q / (2 N_0).
      const double k = p.L() + 0.5 - p.jacobi_beta();
      const double ratio = -1.0 / (k * (n + p.jacobi_beta()));
      scale_ = sign * std::abs(0.5 * ratio) * std::exp(x1_log_norm(p, n) - oscillator::log_norm(p, 0));
    } else {
      scale_ = 1.0;
      const double norm2 = quadrature::integrate([this](double r) { const double v = raw(r); return v * v; }, 0.0,
                                                 std::numeric_limits<double>::infinity(), 1e-300, 1e-13)
                               .value;
      scale_ = sign / std::sqrt(norm2);
    }
  }

  double operator()(double r) const { return scale_ * raw(r); }
  double energy() const { return energy_; }
  const Poly& eop() const { return q_; }

 private:
  double raw(double r) const {
    const double t = pct::t_of_r(p_, r);
    return ground_(r) * q_(t) / den_(t);
  }

  ExtensionSpec spec_;
  ModelParams p_;
  int n_;
  oscillator::Eigenstate ground_;
  Poly q_;
  Poly den_;
  double energy_ = 0.0;
  double scale_ = 1.0;
};

inline double extended_wavefunction(const ExtensionSpec& spec, const ModelParams& p, int n, double r) {
  return ExtendedEigenstate(spec, p, n)(r);
}

namespace detail {

struct ExtSuperParts {
  double L, beta, a;
  Poly den, shifted;
};

inline ExtSuperParts ext_super_parts(const ExtensionSpec& spec, const ModelParams& p, const char* what) {
  if (spec.type == ExtensionType::III)
    throw InvalidExtension(std::string(what) + ": defined for types I and II only");
  require_extension(spec, p);
  const double L = p.L(), beta = p.jacobi_beta();
  return {L, beta, p.alpha(), denominator(spec.type, spec.m, L, beta),
          denominator(spec.type, spec.m, L + 1.0, beta + 1.0)};
}

}  // namespace detail

/// -f d/dr log psi_0^{ext} - f'/2 for types I and II:
///   -(L+1)/r + alpha (1/2 + beta) r - f (p~'/p~ - p'/p),
/// with p~ the denominator at (L+1, Delta+2 alpha) and primes in r.
inline double extended_superpotential(const ExtensionSpec& spec, const ModelParams& p, double r) {
  const auto parts = detail::ext_super_parts(spec, p, "extended_superpotential");
  if (!(r > 0.0)) throw std::domain_error("extended_superpotential: r must be > 0");
  const double t = pct::t_of_r(p, r), tp = pct::t_prime(p, r);
  const double log_d = tp * (parts.shifted.derivative()(t) / parts.shifted(t) - parts.den.derivative()(t) / parts.den(t));
  return -(parts.L + 1.0) / r + parts.a * (0.5 + parts.beta) * r - pct::deforming_f(p, r) * log_d;
}

/// dW_ext/dr, analytic.
inline double extended_superpotential_prime(const ExtensionSpec& spec, const ModelParams& p, double r) {
  const auto parts = detail::ext_super_parts(spec, p, "extended_superpotential_prime");
  if (!(r > 0.0)) throw std::domain_error("extended_superpotential_prime: r must be > 0");
  const double t = pct::t_of_r(p, r), tp = pct::t_prime(p, r), f = pct::deforming_f(p, r), a = parts.a;
  auto logd = [t](const Poly& q) {
    const Poly d1 = q.derivative();
    const double v = q(t), q1 = d1(t) / v, q2 = d1.derivative()(t) / v;
    return std::pair{q1, q2 - q1 * q1};
  };
  const auto [s1, s2] = logd(parts.shifted);
  const auto [d1, d2] = logd(parts.den);
  const double g = s1 - d1, gp = s2 - d2;
  // f t' = -4 alpha r / f
  const double ft_prime = -4.0 * a / f + 8.0 * a * a * r * r / (f * f);
  return (parts.L + 1.0) / (r * r) + a * (0.5 + parts.beta) - (ft_prime * g + f * tp * tp * gp);
}

/// V_ext + 2 f W_ext'
inline double extended_partner_potential(const ExtensionSpec& spec, const ModelParams& p, double r) {
  return extended_potential(spec, p, r) + 2.0 * pct::deforming_f(p, r) * extended_superpotential_prime(spec, p, r);
}

/// The same partner written as V_ext(r; L+1, omega') + alpha (2L + 3 + Delta/alpha).
inline double extended_partner_shape_form(const ExtensionSpec& spec, const ModelParams& p, double r) {
  if (spec.type == ExtensionType::III)
    throw InvalidExtension("extended_partner_shape_form: defined for types I and II only");
  const ModelParams up(p.alpha(), p.L() + 1, susy::omega_prime(p));
  return extended_potential(spec, up, r) + susy::partner_shift(p);
}

// ---------------------------------------------------------------------------
// Constant-mass limits

/// Seed validity as alpha -> 0: II and III need m < L + 1/2, III m even.
inline std::optional<std::string> limit_seed_violation(const ExtensionSpec& spec, int L) {
  if (auto v = detail::common_violation(spec)) return v;
  if (L < 0) return "L must be >= 0";
  if (spec.type != ExtensionType::I && !(spec.m < L + 0.5)) return "requires m < L + 1/2";
  return std::nullopt;
}

/// Extension validity as alpha -> 0: II and III need m < L + 3/2.
inline std::optional<std::string> limit_extension_violation(const ExtensionSpec& spec, int L) {
  if (auto v = detail::common_violation(spec)) return v;
  if (L < 0) return "L must be >= 0";
  if (spec.type != ExtensionType::I && !(spec.m < L + 1.5)) return "requires m < L + 3/2";
  return std::nullopt;
}

namespace detail {

inline void require_limit(std::optional<std::string> v, const ExtensionSpec& spec, const char* what) {
  if (v) throw InvalidExtension(std::string(what) + " (" + describe(spec) + "): " + *v);
}

/// q_m^{(L)}(rho) for real L.
inline Poly limit_denominator(ExtensionType type, int m, double L) {
  switch (type) {
    case ExtensionType::I: return specfun::laguerre_poly(m, L - 0.5).composed_linear(0.0, -1.0);
    case ExtensionType::II: return specfun::laguerre_poly(m, -L - 1.5);
    case ExtensionType::III: return specfun::laguerre_poly(m, -L - 1.5).composed_linear(0.0, -1.0);
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

inline double limit_seed(const ExtensionSpec& spec, int L, double omega, double r) {
  detail::require_limit(limit_seed_violation(spec, L), spec, "limit_seed");
  if (!(r > 0.0)) throw std::domain_error("limit_seed: r must be > 0");
  const double x = 0.25 * omega * r * r;  // rho / 2
  const double rho = 2.0 * x;
  switch (spec.type) {
    case ExtensionType::I:
      return std::pow(r, L + 1.0) * std::exp(x) * specfun::laguerre_poly(spec.m, L + 0.5)(-rho);
    case ExtensionType::II:
      return std::pow(r, -L) * std::exp(-x) * specfun::laguerre_poly(spec.m, -L - 0.5)(rho);
    case ExtensionType::III:
      return std::pow(r, -L) * std::exp(x) * specfun::laguerre_poly(spec.m, -L - 0.5)(-rho);
  }
  throw std::logic_error("unreachable");
}

inline double limit_seed_energy(const ExtensionSpec& spec, int L, double omega) {
  detail::require_limit(limit_seed_violation(spec, L), spec, "limit_seed_energy");
  const double m = spec.m;
  switch (spec.type) {
    case ExtensionType::I: return -omega * (L + 1.5 + 2.0 * m);
    case ExtensionType::II: return -omega * (L - 0.5 - 2.0 * m);
    case ExtensionType::III: return -omega * (-L + 0.5 + 2.0 * m);
  }
  throw std::logic_error("unreachable");
}

/// q_m^{(L)}(rho)
inline Poly limit_denominator_poly(const ExtensionSpec& spec, int L) {
  detail::require_limit(limit_extension_violation(spec, L), spec, "limit_denominator_poly");
  return detail::limit_denominator(spec.type, spec.m, L);
}

/// -2 omega { q'/q + 2 rho [q''/q - (q'/q)^2] }, derivatives in rho.
inline double limit_rational_term(const ExtensionSpec& spec, int L, double omega, double r) {
  const Poly q = limit_denominator_poly(spec, L);
  if (!(r > 0.0)) throw std::domain_error("limit_rational_term: r must be > 0");
  const double rho = 0.5 * omega * r * r;
  const Poly d1 = q.derivative();
  const double Q = q(rho), q1 = d1(rho) / Q, q2 = d1.derivative()(rho) / Q;
  return -2.0 * omega * (q1 + 2.0 * rho * (q2 - q1 * q1));
}

/// Laguerre exceptional polynomial in rho that Q_n^{(m)} tends to (up to a
/// constant factor) as alpha -> 0; 1 for type III with n = -m-1.
inline Poly limit_eop(const ExtensionSpec& spec, int L, double omega, int n) {
  (void)omega;  // the rho-polynomial does not depend on omega
  detail::require_limit(limit_extension_violation(spec, L), spec, "limit_eop");
  require_level(spec, n);
  if (n < 0) return Poly::constant(1.0);
  using specfun::laguerre_poly;
  const int m = spec.m;
  const Poly q = detail::limit_denominator(spec.type, m, L);
  const Poly rho = Poly::linear(0.0, 1.0);
  switch (spec.type) {
    case ExtensionType::I: {
      const Poly q1 = detail::limit_denominator(spec.type, m - 1, L + 1.0);
      const Poly Ln = laguerre_poly(n, L - 0.5);
      return q * (Ln + laguerre_poly(n - 1, L + 0.5)) + q1 * Ln;
    }
    case ExtensionType::II: {
      const Poly q1 = detail::limit_denominator(spec.type, m - 1, L - 1.0);
      const Poly Ln = laguerre_poly(n, L + 1.5);
      return q * ((L + 1.5) * Ln - rho * laguerre_poly(n - 1, L + 2.5)) + rho * q1 * Ln;
    }
    case ExtensionType::III: {
      const Poly q1 = detail::limit_denominator(spec.type, m - 1, L - 1.0);
      const Poly Ln = laguerre_poly(n, L + 1.5);
      return q * (Poly::linear(L + 1.5, -1.0) * Ln - rho * laguerre_poly(n - 1, L + 2.5)) - rho * q1 * Ln;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace pdmosc::ext
