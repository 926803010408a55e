#pragma once

// Deformed supersymmetry for the PDM oscillator: superpotential, the first
// order intertwiners A+- = -+ sqrt(f) d/dr sqrt(f) + W, partner potential and
// the shape-invariance hierarchy.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscillator.hpp"
#include "pct.hpp"
#include "stencil.hpp"

namespace pdmosc::susy {

inline constexpr int kMaxDepth = 32;

/// W(r; L, omega) = -(L+1) f / r + alpha (L + 3/2 + Delta/(2 alpha)) r
inline double superpotential(const ModelParams& p, double r) {
  p.require_deformed("superpotential");
  if (!(r > 0.0)) throw std::domain_error("superpotential: r must be > 0");
  const double a = p.alpha(), L = p.L();
  return -(L + 1.0) * pct::deforming_f(p, r) / r + (a * (L + 1.5) + 0.5 * p.delta()) * r;
}

/// dW/dr = (L+1)/r^2 + (alpha + Delta)/2
inline double superpotential_prime(const ModelParams& p, double r) {
  p.require_deformed("superpotential_prime");
  if (!(r > 0.0)) throw std::domain_error("superpotential_prime: r must be > 0");
  return (p.L() + 1.0) / (r * r) + 0.5 * (p.alpha() + p.delta());
}

namespace detail {

// sign = +1 gives A-, sign = -1 gives A+.
template <class Superpotential>
GridFunction apply_intertwiner(double sign, const ModelParams& p, Superpotential&& W, const GridFunction& psi) {
  if (psi.space() != Space::radial) throw std::invalid_argument("intertwiner: radial GridFunction required");
  if (psi.size() < 5) throw std::invalid_argument("intertwiner: grid too small (need >= 5 points)");
  const auto d = stencil::interior_derivatives(psi);
  std::vector<double> out(d.x.size());
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    const double r = d.x[i];
    const double f = pct::deforming_f(p, r), fp = pct::deforming_f_prime(p, r);
    // sqrt(f) d/dr (sqrt(f) psi) = f psi' + f'/2 psi
    out[i] = sign * (f * d.d1[i] + 0.5 * fp * d.value[i]) + W(r) * d.value[i];
  }
  return GridFunction(d.x, std::move(out), Space::radial);
}

}  // namespace detail

/// (sqrt(f) d/dr sqrt(f) + W) psi on the interior nodes (two dropped per side).
inline GridFunction apply_A_minus(const ModelParams& p, const GridFunction& psi) {
  return detail::apply_intertwiner(+1.0, p, [&](double r) { return superpotential(p, r); }, psi);
}

/// (-sqrt(f) d/dr sqrt(f) + W) psi on the interior nodes.
inline GridFunction apply_A_plus(const ModelParams& p, const GridFunction& psi) {
  return detail::apply_intertwiner(-1.0, p, [&](double r) { return superpotential(p, r); }, psi);
}

/// omega' = sqrt(omega^2 + 4 alpha^2 + 4 alpha Delta); Delta' = Delta + 2 alpha.
inline double omega_prime(const ModelParams& p) {
  const double a = p.alpha();
  return std::sqrt(p.omega() * p.omega() + 4.0 * a * a + 4.0 * a * p.delta());
}

/// Constant alpha (2L + 3 + Delta/alpha) separating V1 from V(r; L+1, omega').
inline double partner_shift(const ModelParams& p) {
  p.require_deformed("partner_shift");
  return 2.0 * p.alpha() * p.L() + 3.0 * p.alpha() + p.delta();
}

/// V1 = V0 + 2 f W'
inline double partner_potential(const ModelParams& p, double r) {
  return oscillator::potential(p, r) + 2.0 * pct::deforming_f(p, r) * superpotential_prime(p, r);
}

/// V1 written in shape-invariant form, V(r; L+1, omega') + shift.
inline double partner_potential_shape_form(const ModelParams& p, double r) {
  return oscillator::potential(p.L() + 1.0, omega_prime(p), r) + partner_shift(p);
}

struct HierarchyLevel {
  int i;
  int L_i;
  double omega_i;
  double eps_i;
  double shift_i;
};

/// Parameters (alpha, L+i, omega^(i)) of level i.
inline ModelParams level_params(const ModelParams& p, int i) {
  const double a = p.alpha();
  const double w = std::sqrt(p.omega() * p.omega() + 4.0 * i * a * p.delta() + 4.0 * i * i * a * a);
  return ModelParams(a, p.L() + i, w);
}

inline std::vector<HierarchyLevel> hierarchy(const ModelParams& p, int depth) {
  p.require_deformed("hierarchy");
  if (depth < 0 || depth > kMaxDepth)
    throw std::domain_error("hierarchy: depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
  const double a = p.alpha(), L = p.L(), D = p.delta();
  std::vector<HierarchyLevel> levels;
  levels.reserve(depth + 1);
  for (int i = 0; i <= depth; ++i) {
    const double eps = (i == 0) ? oscillator::energy(p, 0) : a * (4.0 * L + 8.0 * i + 2.0) + 2.0 * D;
    const double shift = i * (a * (2.0 * L + 2.0 * i + 1.0) + D);
    levels.push_back({i, p.L() + i, level_params(p, i).omega(), eps, shift});
  }
  return levels;
}

/// V_i(r) = V(r; L+i, omega^(i)) + shift_i
inline double level_potential(const HierarchyLevel& level, double r) {
  return oscillator::potential(level.L_i, level.omega_i, r) + level.shift_i;
}

}  // namespace pdmosc::susy
