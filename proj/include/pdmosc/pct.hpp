#pragma once

// Point canonical transformation between the radial oscillator with mass
// m(alpha; r) = (1 + alpha r^2)^-2 and the constant-mass trigonometric
// Poschl-Teller problem on 0 < u < pi/2.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdmosc {

/// (alpha, L, omega) with the derived PCT quantities.
///
/// alpha == 0 is the constant-mass limit; every quantity that diverges there
/// (B, c, the angular variable) throws instead of returning inf/NaN.
class ModelParams {
 public:
  ModelParams(double alpha, int L, double omega) : alpha_(alpha), L_(L), omega_(omega) {
    if (!std::isfinite(alpha) || alpha < 0.0) throw std::domain_error("ModelParams: alpha must be >= 0");
    if (L < 0) throw std::domain_error("ModelParams: L must be a nonnegative integer");
    if (!std::isfinite(omega) || omega <= 0.0) throw std::domain_error("ModelParams: omega must be > 0");
    delta_ = std::hypot(omega, alpha);
  }

  double alpha() const { return alpha_; }
  int L() const { return L_; }
  double omega() const { return omega_; }
  bool deformed() const { return alpha_ > 0.0; }

  /// sqrt(omega^2 + alpha^2)
  double delta() const { return delta_; }

  /// Delta / (2 alpha): second Jacobi parameter of the oscillator states.
  double jacobi_beta() const {
    require_deformed("jacobi_beta");
    return delta_ / (2.0 * alpha_);
  }

  double A() const { return L_ + 1.0; }
  double B() const {
    require_deformed("B");
    return 0.5 * (1.0 + delta_ / alpha_);
  }

  double a_pct() const { return std::sqrt(alpha_); }
  double b_pct() const { return 0.0; }
  double c_pct() const {
    require_deformed("c");
    return -alpha_ * L_ * (L_ + 1.0) - omega_ * omega_ / (4.0 * alpha_);
  }

  void require_deformed(const char* what) const {
    if (!deformed()) throw std::domain_error(std::string(what) + ": requires alpha > 0");
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double alpha_;
  int L_;
  double omega_;
  double delta_;
};

enum class Space { radial, angular };

/// Samples of a function on a strictly increasing 1-D grid.
class GridFunction {
 public:
  GridFunction(std::vector<double> grid, std::vector<double> values, Space space)
      : grid_(std::move(grid)), values_(std::move(values)), space_(space) {
    if (grid_.size() != values_.size()) throw std::invalid_argument("GridFunction: length mismatch");
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      if (!std::isfinite(grid_[i]) || !std::isfinite(values_[i]))
        throw std::invalid_argument("GridFunction: non-finite sample at index " + std::to_string(i));
      if (i > 0 && !(grid_[i] > grid_[i - 1]))
        throw std::invalid_argument("GridFunction: grid not strictly increasing");
    }
  }

  template <class Fn>
  static GridFunction sample(std::vector<double> grid, Fn&& fn, Space space) {
    std::vector<double> v;
    v.reserve(grid.size());
    for (double x : grid) v.push_back(fn(x));
    return GridFunction(std::move(grid), std::move(v), space);
  }

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  Space space() const { return space_; }
  std::size_t size() const { return grid_.size(); }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  Space space_;
};

/// `points` equally spaced abscissae from lo to hi inclusive.
inline std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw std::invalid_argument("uniform_grid: need points >= 2 and hi > lo");
  std::vector<double> g(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo + h * i;
  g.back() = hi;
  return g;
}

namespace pct {

inline double deforming_f(const ModelParams& p, double r) { return 1.0 + p.alpha() * r * r; }

/// df/dr
inline double deforming_f_prime(const ModelParams& p, double r) { return 2.0 * p.alpha() * r; }

inline double u_of_r(const ModelParams& p, double r) {
  p.require_deformed("u_of_r");
  if (!(r > 0.0)) throw std::domain_error("u_of_r: r must be > 0");
  return std::atan(std::sqrt(p.alpha()) * r);
}

inline double r_of_u(const ModelParams& p, double u) {
  p.require_deformed("r_of_u");
  if (!(u > 0.0 && u < std::numbers::pi / 2)) throw std::domain_error("r_of_u: u must lie in (0, pi/2)");
  return std::tan(u) / std::sqrt(p.alpha());
}

/// t = (1 - alpha r^2) / (1 + alpha r^2) = cos 2u
inline double t_of_r(const ModelParams& p, double r) {
  p.require_deformed("t_of_r");
  if (!(r > 0.0)) throw std::domain_error("t_of_r: r must be > 0");
  const double ar2 = p.alpha() * r * r;
  return (1.0 - ar2) / (1.0 + ar2);
}

/// dt/dr
inline double t_prime(const ModelParams& p, double r) {
  const double f = deforming_f(p, r);
  return -4.0 * p.alpha() * r / (f * f);
}

struct Pt1Parameters {
  double A;
  double B;
  double c;
};

/// Constant-mass image: V = alpha U(u; A, B) + c and E = alpha eps + c.
inline Pt1Parameters pt1_parameters(const ModelParams& p) {
  p.require_deformed("pt1_parameters");
  return {p.A(), p.B(), p.c_pct()};
}

/// Potential that turns the general von Roos ordering (xi, eta, zeta) with
/// xi + eta + zeta = -1 into the Mustafa-Mazharimousavi form used here.
inline double von_roos_effective_potential(double xi, double zeta, const ModelParams& p, double r,
                                           double V_at_r) {
  if (!(r > 0.0)) throw std::domain_error("von_roos_effective_potential: r must be > 0");
  const double a = p.alpha();
  const double f = deforming_f(p, r);
  // m = f^-2
  const double m = 1.0 / (f * f);
  const double m1 = -4.0 * a * r / (f * f * f);
  const double m2 = -4.0 * a / (f * f * f) + 24.0 * a * a * r * r / (f * f * f * f);
  return V_at_r + 0.5 * (xi + zeta + 0.5) * m2 / (m * m) -
         (xi * zeta + xi + zeta + 7.0 / 16.0) * m1 * m1 / (m * m * m);
}

}  // namespace pct
}  // namespace pdmosc
