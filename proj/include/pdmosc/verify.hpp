#pragma once

// Invariant suites over a fixed parameter sweep. Each check reports a
// measured quantity against a threshold; a check passes when
// measured <= threshold.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "extensions.hpp"
#include "oracle.hpp"
#include "oscillator.hpp"
#include "pct.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "stencil.hpp"
#include "susy.hpp"

namespace pdmosc::verify {

struct Check {
  std::string suite;
  std::string name;
  double measured;
  double threshold;
  bool pass;
};

inline Check make_check(std::string suite, std::string name, double measured, double threshold) {
  const bool pass = std::isfinite(measured) && measured <= threshold;
  return {std::move(suite), std::move(name), measured, threshold, pass};
}

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// Shared helpers

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline int sign_changes(const std::vector<double>& v) {
  int count = 0;
  double last = 0.0;
  for (double x : v) {
    if (x == 0.0) continue;
    if (last != 0.0 && (x > 0.0) != (last > 0.0)) ++count;
    last = x;
  }
  return count;
}

/// <f, g> over (0, inf).
template <class F, class G>
double radial_overlap(const F& f, const G& g) {
  return quadrature::integrate([&](double r) { return r > 0.0 ? f(r) * g(r) : 0.0; }, 0.0,
                               std::numeric_limits<double>::infinity(), 1e-300, 1e-13)
      .value;
}

/// Largest |<psi_i, psi_j> - delta_ij| over a family.
inline double orthonormality_error(const std::vector<std::function<double(double)>>& family) {
  double worst = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j)
      worst = std::max(worst, std::abs(radial_overlap(family[i], family[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

/// Weighted t-space inner product with weight (1-t)^{L+1/2} (1+t)^beta p^-2.
inline double eop_inner(const Poly& a, const Poly& b, const Poly& den, double L, double beta) {
  auto w = [&](double t) {
    const double d = den(t);
    return a(t) * b(t) * std::pow(1.0 - t, L + 0.5) * std::pow(1.0 + t, beta) / (d * d);
  };
  return quadrature::integrate(w, -1.0, 1.0, 1e-300, 1e-14).value;
}

/// Largest |<Q_j, Q_k>| / sqrt(<Q_j,Q_j><Q_k,Q_k>) over j != k.
inline double eop_orthogonality(const ExtensionSpec& spec, const ModelParams& p, int n_max) {
  std::vector<int> levels;
  if (spec.type == ExtensionType::III) levels.push_back(-spec.m - 1);
  for (int n = 0; n <= n_max; ++n) levels.push_back(n);
  const Poly den = ext::denominator_poly(spec, p);
  std::vector<Poly> q;
  for (int n : levels) q.push_back(ext::eop_polynomial(spec, p, n));
  std::vector<double> diag;
  for (const auto& x : q) diag.push_back(eop_inner(x, x, den, p.L(), p.jacobi_beta()));
  double worst = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j)
    for (std::size_t k = j + 1; k < q.size(); ++k)
      worst = std::max(worst, std::abs(eop_inner(q[j], q[k], den, p.L(), p.jacobi_beta())) /
                                  std::sqrt(diag[j] * diag[k]));
  return worst;
}

/// max_k |a_k - b_k| / max_k |b_k|
inline double coefficient_error(const Poly& a, const Poly& b) {
  double num = 0.0, den = 0.0;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) {
    num = std::max(num, std::abs(a.coeff(k) - b.coeff(k)));
    den = std::max(den, std::abs(b.coeff(k)));
  }
  return num / den;
}

/// (1 + Delta/(2 alpha) - m) p_m(L+1, Delta+2 alpha) for type I,
/// (m - L - 3/2) p_m(L+1, Delta+2 alpha) for type II.
inline Poly q0_identity_rhs(const ExtensionSpec& spec, const ModelParams& p) {
  const double L = p.L(), beta = p.jacobi_beta(), m = spec.m;
  const Poly shifted = ext::detail::denominator(spec.type, spec.m, L + 1.0, beta + 1.0);
  if (spec.type == ExtensionType::I) return (1.0 + beta - m) * shifted;
  if (spec.type == ExtensionType::II) return (m - L - 1.5) * shifted;
  throw ext::InvalidExtension("q0 identity: types I and II only");
}

/// Radial grid for residual checks: covers the bulk of the lower states.
inline std::vector<double> residual_grid(const ModelParams& p) {
  const double r_max = std::min(40.0, 12.0 / std::sqrt(std::max(p.omega(), p.alpha())));
  return uniform_grid(0.02, r_max, 4001);
}

/// Population variance of diff over a grid.
template <class F>
double shift_variance(const F& diff, const std::vector<double>& grid) {
  double mean = 0.0;
  for (double r : grid) mean += diff(r);
  mean /= static_cast<double>(grid.size());
  double var = 0.0;
  for (double r : grid) var += (diff(r) - mean) * (diff(r) - mean);
  return var / static_cast<double>(grid.size());
}

/// Fixed parameter sets of the default sweep.
inline std::vector<ModelParams> sweep() {
  return {ModelParams(0.3, 0, 1.0), ModelParams(1.0 / std::sqrt(3.0), 1, 1.0), ModelParams(0.1, 2, 2.0)};
}

// ---------------------------------------------------------------------------
// Suites

inline std::vector<Check> specfun_suite() {
  const std::string S = "specfun";
  std::vector<Check> out;
  std::mt19937_64 rng(20240521);
  std::uniform_real_distribution<double> U(-5.0, 5.0);

  double endpoint = 0.0, symmetry = 0.0, recurrence = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const double a = U(rng), b = U(rng);
    for (int n = 0; n <= 12; ++n) {
      const Poly P = specfun::jacobi_poly(n, a, b), Pswap = specfun::jacobi_poly(n, b, a);
      const double at1 = specfun::generalized_binomial(n + a, n);
      const double atm1 = ((n % 2) ? -1.0 : 1.0) * specfun::generalized_binomial(n + b, n);
      endpoint = std::max(endpoint, std::abs(P(1.0) - at1) / std::max(1.0, std::abs(at1)));
      endpoint = std::max(endpoint, std::abs(P(-1.0) - atm1) / std::max(1.0, std::abs(atm1)));
      for (int i = 0; i < 20; ++i) {
        const double z = -0.95 + 0.1 * i;
        const double lhs = P(-z), rhs = ((n % 2) ? -1.0 : 1.0) * Pswap(z);
        symmetry = std::max(symmetry, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
      if (n < 2) continue;
      const double s = 2.0 * n + a + b;
      if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6 || std::abs(s - 2.0) < 1e-6 || std::abs(n + a + b) < 1e-6)
        continue;
      const Poly P1 = specfun::jacobi_poly(n - 1, a, b), P2 = specfun::jacobi_poly(n - 2, a, b);
      for (int i = 0; i < 20; ++i) {
        const double z = -0.95 + 0.1 * i;
        const double t0 = 2.0 * n * (n + a + b) * (s - 2.0) * P(z);
        const double t1 = (s - 1.0) * (s * (s - 2.0) * z + a * a - b * b) * P1(z);
        const double t2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s * P2(z);
        // residual of P_n - (A z + B) P_{n-1} + C P_{n-2}
        recurrence = std::max(recurrence, std::abs(t0 - t1 + t2) / std::abs(2.0 * n * (n + a + b) * (s - 2.0)));
      }
    }
  }
  out.push_back(make_check(S, "jacobi endpoint identities", endpoint, 1e-10));
  out.push_back(make_check(S, "jacobi reflection symmetry", symmetry, 1e-10));
  out.push_back(make_check(S, "jacobi three-term recurrence", recurrence, 1e-9));

  // Laguerre limit of Jacobi: error decreases along beta = 10, 100, 1000.
  double worst_ratio = 0.0;
  for (int L = 0; L <= 2; ++L)
    for (int n = 0; n <= 3; ++n) {
      const double omega = 1.0, r = 1.0;
      std::vector<double> errs;
      for (double beta : {10.0, 100.0, 1000.0}) {
        const double jac = specfun::jacobi_poly(n, L + 0.5, beta)(1.0 - omega * r * r / beta);
        const double lag = specfun::laguerre_poly(n, L + 0.5)(0.5 * omega * r * r);
        errs.push_back(std::abs(jac - lag));
      }
      if (n > 0) {
        worst_ratio = std::max({worst_ratio, errs[1] / errs[0], errs[2] / errs[1]});
      }
    }
  out.push_back(make_check(S, "jacobi->laguerre error ratio per decade of beta", worst_ratio, 0.5));

  // log_gamma against Gamma(1/2) = sqrt(pi) and the recursion up to 7.5.
  double lg = 0.5 * std::log(std::numbers::pi);
  for (double x = 0.5; x < 7.5; x += 1.0) lg += std::log(x);
  out.push_back(make_check(S, "log_gamma(7.5) vs recursion", rel_err(specfun::log_gamma(7.5), lg), 1e-13));
  out.push_back(
      make_check(S, "log_gamma(1/2)", rel_err(specfun::log_gamma(0.5), 0.5 * std::log(std::numbers::pi)), 1e-13));
  return out;
}

inline std::vector<Check> oscillator_suite() {
  const std::string S = "oscillator";
  std::vector<Check> out;
  double ortho = 0.0, fd = 0.0, pct_energy = 0.0, pct_wave = 0.0, resid = 0.0;
  int node_failures = 0;
  for (const auto& p : sweep()) {
    std::vector<std::function<double(double)>> fam;
    for (int n = 0; n <= 6; ++n) fam.push_back(oscillator::Eigenstate(p, n));
    ortho = std::max(ortho, orthonormality_error(fam));

    const auto ev = oracle::pdm_eigenvalues(p, [&p](double r) { return oscillator::potential(p, r); }, 6);
    for (int n = 0; n < 6; ++n) fd = std::max(fd, rel_err(ev[n], oscillator::energy(p, n)));

    const auto pt = pct::pt1_parameters(p);
    for (int n = 0; n <= 10; ++n)
      pct_energy =
          std::max(pct_energy, rel_err(p.alpha() * oscillator::pt1_energy(pt.A, pt.B, n) + pt.c, oscillator::energy(p, n)));

    const auto grid = residual_grid(p);
    for (int n = 0; n <= 3; ++n) {
      const oscillator::Eigenstate psi(p, n);
      for (double r : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        const double phi = oscillator::pt1_wavefunction(pt.A, pt.B, n, pct::u_of_r(p, r));
        const double via = std::pow(p.alpha(), 0.25) / std::sqrt(pct::deforming_f(p, r)) * phi;
        pct_wave = std::max(pct_wave, std::abs(via - psi(r)));
      }
      const auto g = GridFunction::sample(grid, psi, Space::radial);
      resid = std::max(resid, oracle::deformed_residual(p, [&p](double r) { return oscillator::potential(p, r); }, g,
                                                        psi.energy()));
      const auto nodes = GridFunction::sample(uniform_grid(1e-3, 200.0, 10000), psi, Space::radial);
      if (sign_changes(nodes.values()) != n) ++node_failures;
    }
  }
  out.push_back(make_check(S, "orthonormality n<=6", ortho, 1e-8));
  out.push_back(make_check(S, "closed-form spectrum vs FD oracle n<=5 (rel)", fd, 1e-6));
  out.push_back(make_check(S, "alpha*eps_n + c = E_n (rel)", pct_energy, 1e-12));
  out.push_back(make_check(S, "PCT wavefunction map", pct_wave, 1e-10));
  out.push_back(make_check(S, "deformed operator residual n<=3", resid, 1e-5));
  out.push_back(make_check(S, "node count failures", node_failures, 0.0));

  // alpha -> 0: energy error linear in alpha, wavefunction error decreasing.
  double ratio_dev = 0.0;
  int wave_failures = 0;
  const double alphas[] = {0.2, 0.1, 0.05};
  for (int n = 0; n <= 2; ++n) {
    double c[3];
    for (int i = 0; i < 3; ++i)
      c[i] = (oscillator::energy(ModelParams(alphas[i], 1, 1.0), n) - (2.0 * n + 2.5)) / alphas[i];
    ratio_dev = std::max({ratio_dev, std::abs(c[1] / c[0] - 1.0), std::abs(c[2] / c[1] - 1.0)});
  }
  for (double r : {0.5, 1.0, 2.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double a : alphas) {
      const double e =
          std::abs(oscillator::wavefunction(ModelParams(a, 1, 1.0), 0, r) - oscillator::limit_wavefunction(1, 1.0, 0, r));
      if (!(e < prev)) ++wave_failures;
      prev = e;
    }
  }
  out.push_back(make_check(S, "alpha->0 energy slope stability", ratio_dev, 0.2));
  out.push_back(make_check(S, "alpha->0 ground-state error non-monotone cases", wave_failures, 0.0));
  return out;
}

inline std::vector<Check> susy_suite() {
  const std::string S = "susy";
  std::vector<Check> out;
  double eps_sum = 0.0, annihilate = 0.0, variance = 0.0, delta_prime = 0.0, factor = 0.0, iso = 0.0;
  for (const auto& p : sweep()) {
    const auto levels = susy::hierarchy(p, 10);
    double sum = 0.0;
    for (int n = 0; n <= 10; ++n) {
      sum += levels[n].eps_i;
      eps_sum = std::max(eps_sum, rel_err(sum, oscillator::energy(p, n)));
    }

    const auto grid = residual_grid(p);
    const auto psi0 = GridFunction::sample(grid, oscillator::Eigenstate(p, 0), Space::radial);
    const auto a0 = susy::apply_A_minus(p, psi0);
    annihilate = std::max(annihilate, stencil::l2_norm(a0.grid(), a0.values()) /
                                          stencil::l2_norm(psi0.grid(), psi0.values()));
    for (int n = 1; n <= 2; ++n) {
      const auto psi = GridFunction::sample(grid, oscillator::Eigenstate(p, n), Space::radial);
      const auto hp = susy::apply_A_plus(p, susy::apply_A_minus(p, psi));
      const auto ref = stencil::restrict_to(psi, hp);
      std::vector<double> res(hp.size());
      const double dE = oscillator::energy(p, n) - oscillator::energy(p, 0);
      for (std::size_t i = 0; i < hp.size(); ++i) res[i] = hp.values()[i] - dE * ref[i];
      factor = std::max(factor, stencil::l2_norm(hp.grid(), res) / (dE * stencil::l2_norm(hp.grid(), ref)));
    }

    const auto g = uniform_grid(0.05, 20.0, 1000);
    variance = std::max(variance, shift_variance(
                                      [&p](double r) {
                                        return susy::partner_potential(p, r) -
                                               oscillator::potential(p.L() + 1.0, susy::omega_prime(p), r);
                                      },
                                      g));
    const double wp = susy::omega_prime(p);
    delta_prime = std::max(delta_prime, rel_err(std::hypot(wp, p.alpha()), p.delta() + 2.0 * p.alpha()));

    const auto ev = oracle::pdm_eigenvalues(p, [&p](double r) { return susy::partner_potential(p, r); }, 4);
    for (int n = 0; n < 4; ++n) iso = std::max(iso, rel_err(ev[n], oscillator::energy(p, n + 1)));
  }
  out.push_back(make_check(S, "sum eps_i = E_n, n<=10 (rel)", eps_sum, 1e-12));
  out.push_back(make_check(S, "A- psi_0 annihilation", annihilate, 1e-6));
  out.push_back(make_check(S, "A+ A- psi_n = (E_n - E_0) psi_n", factor, 1e-5));
  out.push_back(make_check(S, "partner shift variance", variance, 1e-18));
  out.push_back(make_check(S, "Delta' = Delta + 2 alpha", delta_prime, 1e-12));
  out.push_back(make_check(S, "partner spectrum = E_{n+1} via oracle", iso, 1e-6));
  return out;
}

/// Valid specs used by the extensions suite.
struct SpecCase {
  ExtensionSpec spec;
  ModelParams params;
};

inline std::vector<SpecCase> extension_cases() {
  return {{{ExtensionType::I, 1}, ModelParams(1.0 / std::sqrt(3.0), 1, 1.0)},
          {{ExtensionType::I, 2}, ModelParams(0.1, 1, 1.0)},
          {{ExtensionType::II, 1}, ModelParams(0.1, 1, 1.0)},
          {{ExtensionType::II, 2}, ModelParams(0.15, 2, 1.5)},
          {{ExtensionType::III, 2}, ModelParams(0.1, 3, 1.0)}};
}

inline std::vector<Check> extensions_suite() {
  const std::string S = "extensions";
  std::vector<Check> out;

  // Q_0 proportionality, m = 1..3 on seeded parameter draws.
  double q0 = 0.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> Uw(0.5, 2.0), Ua(0.02, 0.15);
  std::uniform_int_distribution<int> UL(2, 4);
  for (int draw = 0; draw < 5; ++draw) {
    const double omega = Uw(rng);
    const ModelParams p(Ua(rng) * omega, UL(rng), omega);
    for (int m = 1; m <= 3; ++m)
      for (auto type : {ExtensionType::I, ExtensionType::II}) {
        const ExtensionSpec spec{type, m};
        q0 = std::max(q0, coefficient_error(ext::eop_polynomial(spec, p, 0), q0_identity_rhs(spec, p)));
      }
  }
  out.push_back(make_check(S, "Q_0 proportionality identities", q0, 1e-10));

  double shape = 0.0, ortho_q = 0.0, iso = 0.0, extra = 0.0, resid = 0.0, wfd = 0.0, ortho = 0.0, seed = 0.0;
  int extra_below = 0, node_failures = 0;
  for (const auto& [spec, p] : extension_cases()) {
    ortho_q = std::max(ortho_q, eop_orthogonality(spec, p, 5));
    const auto grid = residual_grid(p);
    const ext::ExtendedPotential V(spec, p);
    auto Vf = [&V](double r) { return V(r); };

    const int lowest = spec.type == ExtensionType::III ? -spec.m - 1 : 0;
    std::vector<std::function<double(double)>> fam;
    for (int n = lowest; n <= 3; ++n) {
      if (n < 0 && n != lowest) continue;
      const ext::ExtendedEigenstate psi(spec, p, n);
      fam.push_back(psi);
      const auto g = GridFunction::sample(grid, psi, Space::radial);
      resid = std::max(resid, oracle::deformed_residual(p, Vf, g, psi.energy()));
      if (spec.type != ExtensionType::III && n >= 0) {
        const auto nodes = GridFunction::sample(uniform_grid(1e-3, 200.0, 10000), psi, Space::radial);
        if (sign_changes(nodes.values()) != n) ++node_failures;
      }
    }
    if (spec.type != ExtensionType::III) ortho = std::max(ortho, orthonormality_error(fam));

    const ext::Partner q = ext::partner(spec, p);
    const auto ev = oracle::pdm_eigenvalues(p, [&V, &q](double r) { return V(r) + q.gamma; }, 5);
    if (spec.type == ExtensionType::III) {
      const ModelParams pp(p.alpha(), q.L, q.omega);
      if (ev[0] < oscillator::energy(pp, 0)) ++extra_below;
      extra = std::max(extra, rel_err(ev[0] - q.gamma, ext::extended_energy(spec, p, -spec.m - 1)));
      for (int n = 0; n < 4; ++n) iso = std::max(iso, rel_err(ev[n + 1], oscillator::energy(pp, n)));
    } else {
      for (int n = 0; n < 5; ++n) iso = std::max(iso, rel_err(ev[n] - q.gamma, ext::extended_energy(spec, p, n)));
      for (double r : {0.3, 0.7, 1.5, 3.0, 6.0}) {
        shape = std::max(shape, std::abs(ext::extended_partner_potential(spec, p, r) -
                                         ext::extended_partner_shape_form(spec, p, r)));
        // W_ext against -f (log psi_0^ext)' - f'/2 by central differences
        const ext::ExtendedEigenstate g0(spec, p, 0);
        const double h = 1e-5 * r;
        const double dlog = (std::log(std::abs(g0(r + h))) - std::log(std::abs(g0(r - h)))) / (2.0 * h);
        const double w_fd = -pct::deforming_f(p, r) * dlog - 0.5 * pct::deforming_f_prime(p, r);
        wfd = std::max(wfd, std::abs(ext::extended_superpotential(spec, p, r) - w_fd) /
                                std::max(1.0, std::abs(w_fd)));
      }
    }

    // Types II/III seeds grow like r^-L' at the origin; stay clear of it.
    if (q.L >= 0) {
      const ModelParams pp(p.alpha(), q.L, q.omega);
      if (!ext::seed_violation(spec, pp)) {
        const ext::SeedFunction chi = ext::make_seed(spec, pp);
        const auto g = GridFunction::sample(uniform_grid(0.5, 3.0, 2001), chi, Space::radial);
        seed = std::max(seed, oracle::deformed_residual(pp, [&pp](double r) { return oscillator::potential(pp, r); },
                                                        g, chi.energy));
      }
    }
  }
  out.push_back(make_check(S, "EOP weighted orthogonality j!=k<=5", ortho_q, 1e-8));
  out.push_back(make_check(S, "extended orthonormality (types I/II)", ortho, 1e-7));
  out.push_back(make_check(S, "extended node count failures", node_failures, 0.0));
  out.push_back(make_check(S, "extended eigenpair residual", resid, 1e-5));
  out.push_back(make_check(S, "isospectrality via oracle (rel)", iso, 1e-5));
  out.push_back(make_check(S, "type III extra level vs E_{-m-1} (rel)", extra, 1e-5));
  out.push_back(make_check(S, "type III levels below partner ground (missing)", 1.0 - extra_below, 0.0));
  out.push_back(make_check(S, "extended shape invariance", shape, 1e-7));
  out.push_back(make_check(S, "W_ext defining relation (finite differences)", wfd, 1e-6));
  out.push_back(make_check(S, "seed function residual", seed, 1e-5));

  // m = 1 type I closed forms at L = omega = 1, alpha = 1/sqrt 3
  const ModelParams p(1.0 / std::sqrt(3.0), 1, 1.0);
  const ExtensionSpec s1{ExtensionType::I, 1};
  double pot = 0.0, norm = 0.0, known = 0.0;
  const double a = p.alpha(), D = p.delta(), L = p.L();
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double f = pct::deforming_f(p, r), x = D * r * r;
    const double closed = oscillator::potential(p, r) +
                          4.0 * (D - a * (2.0 * L + 1.0)) * f * (x - 2.0 * L - 1.0) / ((x + 2.0 * L + 1.0) * (x + 2.0 * L + 1.0));
    pot = std::max(pot, std::abs(ext::extended_potential(s1, p, r) - closed) / std::max(1.0, std::abs(closed)));
  }
  for (int n = 0; n <= 3; ++n) {
    const ext::ExtendedEigenstate c(s1, p, n, ext::Normalization::closed_form);
    const ext::ExtendedEigenstate qd(s1, p, n, ext::Normalization::quadrature);
    for (double r : {0.2, 0.8, 1.7, 4.0}) norm = std::max(norm, std::abs(c(r) - qd(r)));
  }
  const double values[] = {19.0, 55.0, 107.0};
  for (int n = 0; n < 3; ++n)
    known = std::max(known, rel_err(ext::extended_energy(s1, p, n), values[n] / (2.0 * std::sqrt(3.0))));
  out.push_back(make_check(S, "m=1 potential closed form", pot, 1e-10));
  out.push_back(make_check(S, "m=1 closed-form vs quadrature normalization", norm, 1e-9));
  out.push_back(make_check(S, "m=1 energies {19,55,107}/(2 sqrt 3)", known, 1e-14));
  return out;
}

inline std::vector<Check> run_suite(const std::string& name) {
  if (name == "specfun") return specfun_suite();
  if (name == "oscillator") return oscillator_suite();
  if (name == "susy") return susy_suite();
  if (name == "extensions") return extensions_suite();
  if (name == "all") {
    std::vector<Check> all;
    for (const char* s : {"specfun", "oscillator", "susy", "extensions"}) {
      auto part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "' (expected specfun, oscillator, susy, extensions, all)");
}

}  // namespace pdmosc::verify
