#include <cmath>

#include <gtest/gtest.h>

#include "cplate/bounds.hpp"
#include "cplate/reference.hpp"

using namespace cplate;

namespace {

double c4() { return std::pow(beam_constants(1).c, 4); }

}  // namespace

TEST(LambdaN, TableExamples) {
  EXPECT_NEAR(lambda_n(1.0, 1), 1286.66, 0.01);
  EXPECT_NEAR(lambda_n(5.0, 1), 512.080, 0.001);
  EXPECT_NEAR(lambda_n(1e4, 1), 500.564, 5e-3);
  EXPECT_THROW(lambda_n(0.0, 1), std::invalid_argument);
}

TEST(LambdaN, MatchesDefinition) {
  for (double h : {0.7, 1.0, 3.0}) {
    for (int n = 1; n <= 3; ++n) {
      const double expected =
          rho(n, pi2 * h * h).rho / std::pow(h, 4) + rho(1, pi2 / (h * h)).rho - 2.0 * pi4 / (h * h);
      EXPECT_NEAR(lambda_n(h, n), expected, 1e-10 * expected);
    }
  }
}

TEST(Lambda3, LargeHExpansion) {
  const BeamConstants& bc = beam_constants(1);
  const double h = 100.0;
  const double expected = c4() + (2.0 * bc.d * bc.c * bc.c * pi2 + 16.0 * pi4) / (h * h);
  EXPECT_NEAR(lambda3(h), expected, 1e-2);
  EXPECT_NEAR(asymptotics(h).lambda3_asym, expected, 1e-12);
}

TEST(Lambda3, ExceedsUpperBoundAtSquare) {
  EXPECT_GT(lambda3(1.0), nu1(1.0).nu1);
  EXPECT_GT(lambda3(1.0), 1295.93);
}

TEST(Lambda3, BranchesAndMinimum) {
  // The (1,2) branch wins at the square, the (3,1) branch once h is large.
  for (double h : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    const Lambda3Branches b = lambda3_branches(h);
    EXPECT_DOUBLE_EQ(lambda3(h), std::min(b.mode12, b.mode31));
    RecordProperty("branch_gap_h" + std::to_string(static_cast<int>(h)),
                   std::to_string(b.mode31 - b.mode12));
  }
  EXPECT_LE(lambda3_branches(1.0).mode12, lambda3_branches(1.0).mode31);
  EXPECT_LT(lambda3_branches(100.0).mode31, lambda3_branches(100.0).mode12);
}

TEST(Nu1, TableExamples) {
  EXPECT_NEAR(nu1(1.0).nu1, 1295.93, 0.01);
  EXPECT_NEAR(nu1(2.0).nu1, 604.221, 0.001);
  EXPECT_NEAR(bounds_row(3.0).pct_err, 0.124, 0.001);
  EXPECT_THROW(nu1(-2.0), std::invalid_argument);
}

TEST(Nu1, BracketsSquareEnclosure) {
  EXPECT_LE(lambda_n(1.0, 1), reference::kSquareMu1Lower);
  EXPECT_GE(nu1(1.0).nu1, reference::kSquareMu1Upper);
}

TEST(Nu1, FixedPointAndReciprocity) {
  const BeamConstants& bc = beam_constants(1);
  for (double h : {0.5, 1.0, 1.8, 3.0, 10.0, 50.0, 200.0}) {
    const UpperBound ub = nu1(h);
    EXPECT_GE(ub.alpha_g, pi2);
    EXPECT_LE(ub.alpha_g, bc.d * bc.c * bc.c);
    EXPECT_GT(ub.alpha_f, 0.0);
    EXPECT_GE(ub.root_count, 1);
    EXPECT_LE(std::abs(fixed_point_residual(h, ub.alpha_g)), 1e-9) << h;
    EXPECT_NEAR(ub.alpha_f, 0.5 * rho1_prime(h * h * ub.alpha_g) / (h * h), 1e-9 * ub.alpha_f);
    EXPECT_NEAR(ub.alpha_g, 0.5 * rho1_prime(ub.alpha_f), 1e-9) << h;
  }
}

TEST(Nu1, UniqueRootOnTableGrid) {
  for (const auto& e : reference::kBoundsTable) EXPECT_EQ(nu1(e.h).root_count, 1) << e.h;
}

TEST(Bounds, Table1) {
  double prev_pct = 1e9;
  for (const auto& e : reference::kBoundsTable) {
    const BoundsRow row = bounds_row(e.h);
    EXPECT_NEAR(row.lambda1, e.lambda1, e.lambda1_ulp) << "h=" << e.h;
    EXPECT_NEAR(row.nu1, e.nu1, e.nu1_ulp) << "h=" << e.h;
    EXPECT_NEAR(row.pct_err, e.pct_err, 1e-3) << "h=" << e.h;
    EXPECT_LE(row.pct_err, prev_pct);
    prev_pct = row.pct_err;
  }
  const BoundsRow r18 = bounds_row(1.8);
  EXPECT_NEAR(r18.lambda1, 635.529, 0.001);
  EXPECT_NEAR(r18.nu1, 638.044, 0.001);
  EXPECT_NEAR(r18.pct_err, 0.396, 0.001);
}

TEST(Bounds, RowInvariants) {
  for (double h = 1.0; h <= 200.0; h *= 1.25) {
    const BoundsRow row = bounds_row(h);
    EXPECT_LT(row.lambda1, row.nu1) << h;
    EXPECT_LT(row.nu1, row.lambda3) << h;
    EXPECT_LE(row.lambda1, row.lambda2);
    EXPECT_GE(row.pct_err, 0.0);
    ASSERT_TRUE(row.negativity.has_value());
  }
}

TEST(NegPartBounds, Table2) {
  for (const auto& e : reference::kNegativityTable) {
    EXPECT_NEAR(neg_part_bounds(e.h).l2, e.l2_bound, 1e-4) << "h=" << e.h;
  }
  EXPECT_NEAR(neg_part_bounds(40.0).l2, 0.0179, 1e-4);
}

TEST(NegPartBounds, FormulaAndVacuousCase) {
  const NegativityBounds b = negativity_from(1.0, 2.0, 5.0);
  EXPECT_NEAR(b.l2, 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(b.linf, std::pow(5.0, 0.25) / (2.0 * std::sqrt(3.0)), 1e-15);
  EXPECT_THROW(negativity_from(1.0, 5.0, 5.0), VacuousBoundError);
  EXPECT_THROW(negativity_from(1.0, 6.0, 5.0), NumericalError);
}

TEST(NegPartBounds, DecreasingOverTableGrid) {
  double prev = 1.0;
  for (const auto& e : reference::kNegativityTable) {
    const double l2 = neg_part_bounds(e.h).l2;
    EXPECT_LT(l2, prev);
    prev = l2;
  }
}

TEST(Asymptotics, LeadingTerms) {
  const BeamConstants& bc = beam_constants(1);
  const double c2 = bc.c * bc.c;
  const AsymptoticReport far = asymptotics(1e8);
  EXPECT_NEAR(far.mu1_asym, 500.564, 5e-3);
  const AsymptoticReport a = asymptotics(3.0);
  EXPECT_DOUBLE_EQ(a.mu1_asym, c2 * c2 + 2.0 * bc.d * c2 * pi2 / 9.0);
}

TEST(Asymptotics, CubicCoefficientsAtLargeH) {
  const double h = 200.0, h3 = h * h * h;
  const double base = asymptotics(h).mu1_asym;
  EXPECT_NEAR((lambda_n(h, 1) - base) * h3 / (4.0 * std::numbers::sqrt2 * pi2 * pi), 1.0, 0.03);
  EXPECT_NEAR(4.0 * std::numbers::sqrt2 * pi2 * pi, 175.4, 0.05);
  const BeamConstants& bc = beam_constants(1);
  const double nu_coef = 4.0 * std::numbers::sqrt2 * pi2 * std::sqrt(bc.d) * bc.c;
  EXPECT_NEAR(nu_coef, 195.8, 0.05);
  EXPECT_NEAR((nu1(h).nu1 - base) * h3 / nu_coef, 1.0, 0.03);
}

TEST(Asymptotics, UpperBoundRemainderIsQuartic) {
  double worst = 0.0, first = 0.0;
  for (double h : {25.0, 50.0, 100.0, 200.0}) {
    const double rem = std::abs(nu1(h).nu1 - asymptotics(h).nu1_asym_h3) * std::pow(h, 4);
    if (first == 0.0) first = rem;
    worst = std::max(worst, rem);
    RecordProperty("nu1_remainder_h4_" + std::to_string(static_cast<int>(h)), std::to_string(rem));
  }
  // Bounded: no growth beyond a modest factor of the h = 25 value.
  EXPECT_LE(worst, 2.0 * first);
}

TEST(Asymptotics, NegativityDecay) {
  const double h = 200.0;
  const AsymptoticReport a = asymptotics(h);
  EXPECT_NEAR(neg_part_bounds(h).l2 / a.neg_l2_asym, 1.0, 0.05);
  EXPECT_NEAR(neg_part_bounds(h).linf / a.neg_linf_asym, 1.0, 0.05);
}

TEST(Rho1, SmallArgumentExpansion) {
  const BeamConstants& bc = beam_constants(1);
  const double slope = 2.0 * bc.d * bc.c * bc.c;
  EXPECT_NEAR(rho1(1e-10), c4() + slope * 1e-10, 1e-9);
  EXPECT_DOUBLE_EQ(rho1_prime(1e-10), slope);
  // Solver and expansion agree just past the switch.
  EXPECT_NEAR(rho1(1.01e-8), c4() + slope * 1.01e-8, 1e-9);
  EXPECT_NEAR(rho1_prime(0.99e-8), rho1_prime(1.01e-8), 1e-6);
}
