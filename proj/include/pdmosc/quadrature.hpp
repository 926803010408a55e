#pragma once

// Globally adaptive 21-point Gauss-Kronrod quadrature. Semi-infinite ranges
// are mapped onto [0, 1) by x = lo + s / (1 - s).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdmosc::quadrature {

namespace detail {

// Kronrod abscissae (positive half, descending to 0) and weights; odd
// indices are shared with the 10-point Gauss rule.
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478200, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error, abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class Fn>
Segment gk21(Fn& fn, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = fn(c);
  double kron = wgk[10] * fc, gauss = 0.0, absk = wgk[10] * std::abs(fc);
  for (int j = 0; j < 10; ++j) {
    const double dx = h * xgk[j];
    const double f1 = fn(c - dx), f2 = fn(c + dx);
    kron += wgk[j] * (f1 + f2);
    absk += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h), absk * std::abs(h)};
}

}  // namespace detail

struct Result {
  double value;
  double error;
  int segments;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integral of fn over (lo, hi); hi may be +infinity. Converges when the
/// summed error estimate is below max(tol, rel_tol * |value|, 50 eps *
/// integral of |fn|), and throws NonConvergence once the segment budget is
/// spent.
template <class Fn>
Result integrate(Fn&& fn, double lo, double hi, double tol, double rel_tol = 0.0, int max_segments = 4000) {
  if (!(hi > lo)) throw std::invalid_argument("quad_integrate: need hi > lo");
  if (!(tol > 0.0)) throw std::invalid_argument("quad_integrate: tol must be > 0");

  const bool infinite = std::isinf(hi);
  auto mapped = [&](double s) {
    if (!infinite) return fn(s);
    const double one_minus = 1.0 - s;
    const double v = fn(lo + s / one_minus);
    return v / (one_minus * one_minus);
  };
  const double a = infinite ? 0.0 : lo, b = infinite ? 1.0 : hi;

  std::priority_queue<detail::Segment> heap;
  heap.push(detail::gk21(mapped, a, b));
  double total = heap.top().value, err = heap.top().error, absint = heap.top().abs_value;
  int segments = 1;
  const double eps = std::numeric_limits<double>::epsilon();
  while (err > std::max({tol, rel_tol * std::abs(total), 50.0 * eps * absint})) {
    if (segments >= max_segments)
      throw NonConvergence("quad_integrate: no convergence after " + std::to_string(segments) +
                           " segments (error estimate " + std::to_string(err) + ")");
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::gk21(mapped, worst.a, mid);
    const auto right = detail::gk21(mapped, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    absint += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  // Re-sum to shed the drift of the running updates.
  double value = 0.0, error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, segments};
}

inline constexpr double kDefaultTol = 1e-12;

/// Value-only convenience wrapper.
template <class Fn>
double quad_integrate(Fn&& fn, double lo, double hi, double tol = kDefaultTol) {
  return integrate(std::forward<Fn>(fn), lo, hi, tol).value;
}

}  // namespace pdmosc::quadrature
