#pragma once

// Five-point finite-difference derivatives on arbitrary smooth grids.

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "pct.hpp"

namespace pdmosc::stencil {

inline constexpr int kWidth = 5;
inline constexpr int kHalf = kWidth / 2;

/// Fornberg weights for derivatives 0..2 at x0 from the given nodes.
/// Returns w[order][node].
inline std::array<std::array<double, kWidth>, 3> fornberg_weights(double x0, std::span<const double, kWidth> x) {
  constexpr int M = 2;
  std::array<std::array<std::array<double, kWidth>, kWidth>, M + 1> d{};
  d[0][0][0] = 1.0;
  double c1 = 1.0;
  for (int n = 1; n < kWidth; ++n) {
    double c2 = 1.0;
    for (int v = 0; v < n; ++v) {
      const double c3 = x[n] - x[v];
      c2 *= c3;
      for (int m = 0; m <= std::min(n, M); ++m) {
        const double prev = (m > 0) ? d[m - 1][n - 1][v] : 0.0;
        d[m][n][v] = ((x[n] - x0) * d[m][n - 1][v] - m * prev) / c3;
      }
    }
    for (int m = 0; m <= std::min(n, M); ++m) {
      const double prev = (m > 0) ? d[m - 1][n - 1][n - 1] : 0.0;
      d[m][n][n] = c1 / c2 * (m * prev - (x[n - 1] - x0) * d[m][n - 1][n - 1]);
    }
    c1 = c2;
  }
  std::array<std::array<double, kWidth>, 3> w{};
  for (int m = 0; m <= M; ++m)
    for (int v = 0; v < kWidth; ++v) w[m][v] = d[m][kWidth - 1][v];
  return w;
}

/// First and second derivatives on the interior nodes [kHalf, size-kHalf).
struct InteriorDerivatives {
  std::vector<double> x;
  std::vector<double> value;
  std::vector<double> d1;
  std::vector<double> d2;
};

inline InteriorDerivatives interior_derivatives(std::span<const double> grid, std::span<const double> values) {
  if (grid.size() != values.size()) throw std::invalid_argument("interior_derivatives: length mismatch");
  if (grid.size() < static_cast<std::size_t>(kWidth))
    throw std::invalid_argument("interior_derivatives: need at least 5 grid points");
  InteriorDerivatives out;
  const std::size_t n = grid.size() - 2 * kHalf;
  out.x.reserve(n);
  out.value.reserve(n);
  out.d1.reserve(n);
  out.d2.reserve(n);
  for (std::size_t i = kHalf; i + kHalf < grid.size(); ++i) {
    const auto nodes = grid.subspan(i - kHalf).first<kWidth>();
    const auto w = fornberg_weights(grid[i], nodes);
    double a = 0.0, b = 0.0;
    for (int k = 0; k < kWidth; ++k) {
      a += w[1][k] * values[i - kHalf + k];
      b += w[2][k] * values[i - kHalf + k];
    }
    out.x.push_back(grid[i]);
    out.value.push_back(values[i]);
    out.d1.push_back(a);
    out.d2.push_back(b);
  }
  return out;
}

inline InteriorDerivatives interior_derivatives(const GridFunction& g) {
  return interior_derivatives(g.grid(), g.values());
}

/// Discrete L2 norm with trapezoid weights.
inline double l2_norm(std::span<const double> x, std::span<const double> v) {
  if (x.size() != v.size() || x.size() < 2) throw std::invalid_argument("l2_norm: bad sizes");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s += 0.5 * (x[i + 1] - x[i]) * (v[i] * v[i] + v[i + 1] * v[i + 1]);
  return std::sqrt(s);
}

inline double l2_norm(const GridFunction& g) { return l2_norm(g.grid(), g.values()); }

/// Samples of g restricted to the abscissae of `on` (which must be a
/// contiguous sub-grid of g, as produced by interior stencils).
inline std::vector<double> restrict_to(const GridFunction& g, const GridFunction& on) {
  const auto& gx = g.grid();
  std::size_t start = 0;
  while (start < gx.size() && gx[start] != on.grid().front()) ++start;
  if (start + on.size() > gx.size()) throw std::invalid_argument("restrict_to: grids are not nested");
  return {g.values().begin() + start, g.values().begin() + start + on.size()};
}

}  // namespace pdmosc::stencil
