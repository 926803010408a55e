#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pdmosc/oscillator.hpp"
#include "pdmosc/pct.hpp"

using namespace pdmosc;
using namespace pdmosc::pct;

namespace {
const double kInvSqrt3 = 1.0 / std::numbers::sqrt3;
}

TEST(ModelParams, RejectsInvalidInput) {
  EXPECT_THROW(ModelParams(-0.1, 0, 1.0), std::domain_error);
  EXPECT_THROW(ModelParams(0.1, -1, 1.0), std::domain_error);
  EXPECT_THROW(ModelParams(0.1, 0, 0.0), std::domain_error);
  EXPECT_THROW(ModelParams(std::nan(""), 0, 1.0), std::domain_error);
  EXPECT_THROW(ModelParams(0.1, 0, INFINITY), std::domain_error);
}

TEST(ModelParams, DerivedQuantityInvariants) {
  for (double a : {0.0, 0.01, 0.3, 1.0, 5.0})
    for (int L : {0, 1, 4})
      for (double w : {0.2, 1.0, 3.0}) {
        const ModelParams p(a, L, w);
        EXPECT_GE(p.delta(), w);
        EXPECT_EQ(p.delta() == w, a == 0.0);
        EXPECT_GE(p.A(), 1.0);
        if (a > 0.0) {
          EXPECT_GT(p.B(), 1.0);
        }
      }
}

TEST(ModelParams, LimitFlagRejectsDivergentQuantities) {
  const ModelParams p(0.0, 1, 1.0);
  EXPECT_THROW(p.B(), std::domain_error);
  EXPECT_THROW(p.c_pct(), std::domain_error);
  EXPECT_THROW(u_of_r(p, 1.0), std::domain_error);
  EXPECT_THROW(t_of_r(p, 1.0), std::domain_error);
  EXPECT_THROW(pt1_parameters(p), std::domain_error);
}

TEST(UofR, Examples) {
  EXPECT_NEAR(u_of_r(ModelParams(1.0, 0, 1.0), 1e-12), 0.0, 1e-11);
  EXPECT_NEAR(u_of_r(ModelParams(1.0, 0, 1.0), 1.0), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(u_of_r(ModelParams(1.0 / 3.0, 0, 1.0), std::sqrt(3.0)), std::numbers::pi / 4, 1e-15);
  EXPECT_THROW(u_of_r(ModelParams(1.0, 0, 1.0), 0.0), std::domain_error);
}

TEST(RofU, ExamplesAndRoundTrip) {
  EXPECT_NEAR(r_of_u(ModelParams(1.0, 0, 1.0), std::numbers::pi / 4), 1.0, 1e-15);
  EXPECT_NEAR(r_of_u(ModelParams(4.0, 0, 1.0), std::numbers::pi / 3), std::sqrt(3.0) / 2.0, 1e-15);
  const ModelParams p(0.5, 0, 1.0);
  for (double r : {0.1, 1.0, 10.0}) EXPECT_NEAR(r_of_u(p, u_of_r(p, r)), r, 1e-14 * r);
  EXPECT_THROW(r_of_u(p, 0.0), std::domain_error);
  EXPECT_THROW(r_of_u(p, std::numbers::pi / 2), std::domain_error);
}

TEST(TofR, Examples) {
  const ModelParams p(1.0, 0, 1.0);
  EXPECT_NEAR(t_of_r(p, 1.0), 0.0, 1e-16);
  EXPECT_NEAR(t_of_r(p, 1e-9), 1.0, 1e-15);
  EXPECT_NEAR(t_of_r(ModelParams(kInvSqrt3, 1, 1.0), 1.0), 2.0 - std::sqrt(3.0), 1e-15);
}

TEST(DeformingF, Examples) {
  EXPECT_EQ(deforming_f(ModelParams(0.0, 0, 1.0), 3.7), 1.0);
  EXPECT_EQ(deforming_f(ModelParams(1.0, 0, 1.0), 2.0), 5.0);
  EXPECT_NEAR(deforming_f(ModelParams(kInvSqrt3, 1, 1.0), 1.0), 1.0 + kInvSqrt3, 1e-15);
}

TEST(Pt1Parameters, Examples) {
  const auto q = pt1_parameters(ModelParams(kInvSqrt3, 1, 1.0));
  EXPECT_NEAR(ModelParams(kInvSqrt3, 1, 1.0).delta(), 2.0 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(q.A, 2.0);
  EXPECT_NEAR(q.B, 1.5, 1e-15);
  EXPECT_NEAR(q.c, -2.0 / std::sqrt(3.0) - std::sqrt(3.0) / 4.0, 1e-14);

  const double a = 0.37;
  const ModelParams p(a, 0, a);
  EXPECT_NEAR(p.delta(), a * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(pt1_parameters(p).B, (1.0 + std::sqrt(2.0)) / 2.0, 1e-15);
  EXPECT_NEAR(pt1_parameters(p).c, -a / 4.0, 1e-15);
}

TEST(Pt1Parameters, GroundEnergyConsistency) {
  for (double a : {0.05, 0.3, 1.0, 2.5})
    for (int L : {0, 1, 3})
      for (double w : {0.5, 1.0, 2.0}) {
        const ModelParams p(a, L, w);
        const auto q = pt1_parameters(p);
        const double E0 = oscillator::energy(p, 0);
        EXPECT_NEAR(a * (q.A + q.B) * (q.A + q.B) + q.c, E0, 1e-12 * std::abs(E0));
      }
}

namespace {
// V_eff from a finite-difference derivative of m(r) = (1 + alpha r^2)^-2.
double von_roos_fd(double xi, double zeta, double alpha, double r, double V) {
  const std::function<double(double)> m = [alpha](double x) { return std::pow(1.0 + alpha * x * x, -2.0); };
  const double h = 1e-4;
  const double m0 = m(r), m1 = oracles::d1(m, r, h), m2 = oracles::d2(m, r, h);
  return V + 0.5 * (xi + zeta + 0.5) * m2 / (m0 * m0) - (xi * zeta + xi + zeta + 7.0 / 16.0) * m1 * m1 / (m0 * m0 * m0);
}
}  // namespace

TEST(VonRoos, MustafaMazharimousaviOrderingIsIdentity) {
  const ModelParams p(0.7, 1, 1.0);
  for (double r : {0.2, 1.0, 3.0}) EXPECT_NEAR(von_roos_effective_potential(-0.25, -0.25, p, r, 1.234), 1.234, 1e-15);
}

TEST(VonRoos, ConstantMassIsIdentity) {
  const ModelParams p(0.0, 1, 1.0);
  for (double xi : {-1.0, 0.0, 0.3})
    for (double zeta : {-0.5, 0.2}) EXPECT_EQ(von_roos_effective_potential(xi, zeta, p, 1.3, 2.0), 2.0);
}

TEST(VonRoos, MatchesFiniteDifferenceMassDerivatives) {
  // xi = 0, zeta = -1/2, alpha = 1, L = 0, omega = 2, r = 1: V = 1, V_eff = 2
  const ModelParams p(1.0, 0, 2.0);
  const double V = oscillator::potential(p, 1.0);
  EXPECT_NEAR(V, 1.0, 1e-15);
  EXPECT_NEAR(von_roos_effective_potential(0.0, -0.5, p, 1.0, V), 2.0, 1e-14);
  EXPECT_NEAR(von_roos_fd(0.0, -0.5, 1.0, 1.0, V), 2.0, 1e-6);
  for (double r : {0.3, 0.9, 2.2})
    for (auto [xi, zeta] : {std::pair{0.0, -0.5}, {-1.0, 0.0}, {-0.5, -0.5}, {0.2, -0.7}}) {
      const ModelParams q(0.6, 1, 1.3);
      EXPECT_NEAR(von_roos_effective_potential(xi, zeta, q, r, 0.0), von_roos_fd(xi, zeta, 0.6, r, 0.0), 1e-6);
    }
}

// Invariants

TEST(PctProperty, CosTwoUIsT) {
  for (double a : {0.1, 1.0, 7.0}) {
    const ModelParams p(a, 0, 1.0);
    for (double r = 0.01; r < 30.0; r *= 1.3) EXPECT_NEAR(std::cos(2.0 * u_of_r(p, r)), t_of_r(p, r), 1e-13);
  }
}

TEST(PctProperty, Monotonicity) {
  const ModelParams p(0.4, 0, 1.0);
  const auto g = uniform_grid(0.01, 50.0, 2000);
  for (std::size_t i = 1; i < g.size(); ++i) {
    EXPECT_GT(u_of_r(p, g[i]), u_of_r(p, g[i - 1]));
    EXPECT_LT(t_of_r(p, g[i]), t_of_r(p, g[i - 1]));
  }
}

TEST(PctProperty, MeasureConsistency) {
  for (double a : {0.2, 1.0, 3.0}) {
    const ModelParams p(a, 0, 1.0);
    const std::function<double(double)> u = [&p](double r) { return u_of_r(p, r); };
    for (double r : {0.1, 0.5, 1.0, 4.0})
      EXPECT_NEAR(oracles::d1(u, r, 1e-5) - std::sqrt(a) / deforming_f(p, r), 0.0, 1e-8);
  }
}

TEST(PctProperty, TPrimeMatchesFiniteDifference) {
  const ModelParams p(0.8, 0, 1.0);
  const std::function<double(double)> t = [&p](double r) { return t_of_r(p, r); };
  for (double r : {0.1, 0.7, 2.0}) EXPECT_NEAR(t_prime(p, r), oracles::d1(t, r, 1e-5), 1e-8);
}

TEST(GridFunction, ValidatesInput) {
  EXPECT_THROW(GridFunction({1.0, 2.0}, {1.0}, Space::radial), std::invalid_argument);
  EXPECT_THROW(GridFunction({1.0, 1.0}, {1.0, 2.0}, Space::radial), std::invalid_argument);
  EXPECT_THROW(GridFunction({1.0, 2.0}, {1.0, std::nan("")}, Space::radial), std::invalid_argument);
  const auto g = GridFunction::sample(uniform_grid(0.0, 1.0, 11), [](double x) { return x * x; }, Space::angular);
  EXPECT_EQ(g.size(), 11u);
  EXPECT_EQ(g.space(), Space::angular);
  EXPECT_DOUBLE_EQ(g.values()[10], 1.0);
}

TEST(UniformGrid, EndpointsExact) {
  const auto g = uniform_grid(0.1, 0.7, 7);
  EXPECT_EQ(g.front(), 0.1);
  EXPECT_EQ(g.back(), 0.7);
  EXPECT_THROW(uniform_grid(1.0, 1.0, 3), std::invalid_argument);
  EXPECT_THROW(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
}
