#pragma once

// Independent numerical checks: a finite-difference eigensolver for
// -d^2/du^2 + U(u) with Dirichlet walls, and residuals of the deformed
// Schrodinger operator on sampled radial functions.

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pct.hpp"
#include "quadrature.hpp"
#include "stencil.hpp"
#include "tridiagonal.hpp"

namespace pdmosc::oracle {

inline constexpr int kDefaultPoints = 4096;

/// -phi'' + U phi = eps phi on (lo, hi), phi(lo) = phi(hi) = 0, discretized
/// with `points` interior nodes.
struct FdProblem {
  std::function<double(double)> potential;
  double lo = 0.0;
  double hi = std::numbers::pi / 2;
  int points = kDefaultPoints;
};

namespace detail {

inline std::vector<double> raw_eigenvalues(const FdProblem& pb, int points, int k) {
  const double h = (pb.hi - pb.lo) / (points + 1);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(points), off(points - 1, -inv_h2);
  for (int i = 0; i < points; ++i) {
    const double x = pb.lo + h * (i + 1);
    const double U = pb.potential(x);
    if (!std::isfinite(U))
      throw std::domain_error("fd_eigenvalues: potential not finite at node u = " + std::to_string(x));
    diag[i] = 2.0 * inv_h2 + U;
  }
  return tridiagonal::lowest_eigenvalues(diag, off, k);
}

}  // namespace detail

/// Lowest k eigenvalues from the 3-point scheme at N and 2N+1 nodes (grid
/// spacing halved exactly), combined by one Richardson step.
inline std::vector<double> fd_eigenvalues(const FdProblem& pb, int k) {
  if (pb.points < 64) throw std::invalid_argument("fd_eigenvalues: need at least 64 points");
  if (!(pb.hi > pb.lo)) throw std::invalid_argument("fd_eigenvalues: empty interval");
  if (k < 1 || k > pb.points / 4) throw std::invalid_argument("fd_eigenvalues: k must lie in [1, points/4]");
  const auto coarse = detail::raw_eigenvalues(pb, pb.points, k);
  const auto fine = detail::raw_eigenvalues(pb, 2 * pb.points + 1, k);
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

/// Unextrapolated eigenvalues at a given node count (for convergence studies).
inline std::vector<double> fd_eigenvalues_raw(const FdProblem& pb, int k) {
  if (k < 1 || k > pb.points / 4) throw std::invalid_argument("fd_eigenvalues: k must lie in [1, points/4]");
  return detail::raw_eigenvalues(pb, pb.points, k);
}

/// Lowest k eigenvalues of pi_r^2 + V(r). With u = arctan(sqrt(alpha) r)
/// and phi = sqrt(f) psi the problem becomes -phi'' + (V/alpha) phi =
/// (E/alpha) phi on (0, pi/2).
template <class Potential>
std::vector<double> pdm_eigenvalues(const ModelParams& p, Potential V, int k, int points = kDefaultPoints) {
  p.require_deformed("pdm_eigenvalues");
  const double a = p.alpha();
  FdProblem pb{[&p, V, a](double u) { return V(pct::r_of_u(p, u)) / a; }, 0.0, std::numbers::pi / 2, points};
  auto eps = fd_eigenvalues(pb, k);
  for (double& e : eps) e *= a;
  return eps;
}

/// ||(pi_r^2 + V - E) psi|| / ||psi|| over the interior nodes, with
/// pi_r^2 psi = -sqrt(f) (f phi')' and phi = sqrt(f) psi.
template <class Potential>
double deformed_residual(const ModelParams& p, Potential V, const GridFunction& psi, double E) {
  if (psi.space() != Space::radial) throw std::invalid_argument("deformed_residual: radial GridFunction required");
  if (psi.size() < 9) throw std::invalid_argument("deformed_residual: grid too coarse (need >= 9 points)");
  std::vector<double> phi(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    phi[i] = std::sqrt(pct::deforming_f(p, psi.grid()[i])) * psi.values()[i];
  const auto d = stencil::interior_derivatives(psi.grid(), phi);
  std::vector<double> res(d.x.size()), val(d.x.size());
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    const double r = d.x[i];
    const double f = pct::deforming_f(p, r), fp = pct::deforming_f_prime(p, r);
    const double s = std::sqrt(f);
    const double psi_i = d.value[i] / s;
    const double kinetic = -s * (fp * d.d1[i] + f * d.d2[i]);
    res[i] = kinetic + (V(r) - E) * psi_i;
    val[i] = psi_i;
  }
  return stencil::l2_norm(d.x, res) / stencil::l2_norm(d.x, val);
}

/// Integral over (lo, hi), hi may be infinite; see quadrature::integrate.
template <class Fn>
double quad_integrate(Fn&& fn, double lo, double hi, double tol = quadrature::kDefaultTol) {
  return quadrature::integrate(std::forward<Fn>(fn), lo, hi, tol).value;
}

}  // namespace pdmosc::oracle
