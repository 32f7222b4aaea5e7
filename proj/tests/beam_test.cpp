#include <cmath>

#include <gtest/gtest.h>

#include "cplate/beam.hpp"
#include "cplate/bounds.hpp"

using namespace cplate;

TEST(BeamMode, ClampedEnds) {
  for (int n = 1; n <= 6; ++n) {
    const BeamMode g(n);
    EXPECT_NEAR(beam_mode_eval(g, 0.0), 0.0, 1e-9);
    EXPECT_NEAR(g(1.0), 0.0, 1e-9);
    EXPECT_NEAR(central_diff(g, 0.0, 1e-6), 0.0, 1e-5);
    EXPECT_NEAR(central_diff(g, 1.0, 1e-6), 0.0, 1e-5);
  }
}

TEST(BeamMode, AnalyticDerivativesMatchDifferences) {
  const BeamMode g(3);
  for (double x : {0.1, 0.37, 0.5, 0.82}) {
    for (int order = 1; order <= 4; ++order) {
      auto lower = [&](double t) { return g.derivative(t, order - 1); };
      const double fd = central_diff(lower, x, 1e-5);
      EXPECT_NEAR(g.derivative(x, order), fd, 1e-6 * (1.0 + std::abs(fd)));
    }
  }
  EXPECT_THROW((void)g.derivative(0.5, 5), std::invalid_argument);
}

TEST(BeamMode, EigenfunctionOfFourthDerivative) {
  const BeamMode g(1);
  const double c4 = std::pow(g.constants().c, 4);
  const double s = 1e-3;
  for (double x = 0.1; x < 0.91; x += 0.05) {
    const double d4 = (g(x - 2 * s) - 4 * g(x - s) + 6 * g(x) - 4 * g(x + s) + g(x + 2 * s)) /
                      (s * s * s * s);
    EXPECT_NEAR(d4 / (c4 * g(x)), 1.0, 1e-4) << x;
  }
}

TEST(BeamMode, StableForHighModes) {
  // Symmetric about 1/2 for odd n, antisymmetric for even n.
  for (int n : {8, 15, 30}) {
    const BeamMode g(n);
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    for (double x : {0.05, 0.2, 0.4}) EXPECT_NEAR(g(1.0 - x), sign * g(x), 1e-9);
    EXPECT_NEAR(beam_mode_norms(g).l2_norm, 1.0, 1e-8);
  }
}

TEST(BeamModeNorms, Examples) {
  const BeamNorms n1 = beam_mode_norms(BeamMode(1));
  EXPECT_NEAR(n1.l2_norm, 1.0, 1e-8);
  EXPECT_NEAR(n1.grad_sq, 0.54988 * 4.73004 * 4.73004, 1e-3);
  const BeamConstants& b1 = beam_constants(1);
  EXPECT_NEAR(n1.grad_sq, b1.d * b1.c * b1.c, 1e-6);
  const BeamConstants& b2 = beam_constants(2);
  EXPECT_NEAR(beam_mode_norms(BeamMode(2)).grad_sq, b2.d * b2.c * b2.c, 1e-8);
}

TEST(BeamModeNorms, Orthonormal) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const BeamMode gm(m), gn(n);
      const double ip = integrate([&](double x) { return gm(x) * gn(x); }, 0.0, 1.0);
      EXPECT_NEAR(ip, m == n ? 1.0 : 0.0, 1e-8);
    }
  }
}

TEST(BeamModeNorms, GradientMatchesSlopeAtZero) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_NEAR(beam_mode_norms(BeamMode(n)).grad_sq / (0.5 * rho_prime(n, 1e-7)), 1.0, 1e-4);
  }
}

TEST(HartreeEnergy, Examples) {
  const BeamConstants& bc = beam_constants(1);
  const double c2 = bc.c * bc.c;
  EXPECT_NEAR(hartree_energy(1.0), c2 * c2 + 2.0 * bc.d * c2 * pi2 + pi4, 1e-9);
  EXPECT_NEAR(hartree_energy(1e6), 500.564, 5e-3);
  EXPECT_THROW(hartree_energy(0.0), std::invalid_argument);
}

TEST(HartreeEnergy, WithinCubicBandOfUpperBound) {
  // The gap to nu_1 is carried by the h^-3 term 4 sqrt2 pi^2 d^1/2 c ~ 196.
  for (double h : {5.0, 10.0, 20.0}) {
    const double gap = nu1(h).nu1 - hartree_energy(h);
    EXPECT_LE(std::abs(gap) * h * h * h, 2.0 * 196.0) << h;
  }
  EXPECT_NEAR(nu1(5.0).nu1, 512.237, 1e-3);
}

TEST(SeparableGroundstate, BoundaryAndPositivity) {
  const double h = 5.0;
  for (int i = 0; i <= 10; ++i) {
    const double x = h * i / 10.0;
    EXPECT_NEAR(separable_groundstate(h, x, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(separable_groundstate(h, x, 1.0), 0.0, 1e-9);
  }
  for (int i = 1; i < 30; ++i) {
    for (int j = 1; j < 30; ++j) {
      EXPECT_GT(separable_groundstate(h, h * i / 30.0, j / 30.0), 0.0);
    }
  }
  EXPECT_THROW(separable_groundstate(-1.0, 0.0, 0.0), std::invalid_argument);
}

TEST(SeparableGroundstate, UnitNorm) {
  for (double h : {1.0, 5.0}) {
    const double norm2 = integrate(
        [&](double x) {
          return integrate([&](double y) { return std::pow(separable_groundstate(h, x, y), 2); },
                           0.0, 1.0);
        },
        0.0, h);
    EXPECT_NEAR(norm2, 1.0, 1e-8);
  }
}
