#pragma once

// Self-check suite behind `cplate verify`. Each check reports a name, a
// verdict and a short deterministic detail string (no timings).

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cplate/beam.hpp"
#include "cplate/bounds.hpp"
#include "cplate/eigencurve.hpp"
#include "cplate/greens.hpp"
#include "cplate/oracle.hpp"
#include "cplate/reference.hpp"

namespace cplate {

enum class VerifyLevel { fast, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace verify {

inline std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> out;
  const double start = std::log10(lo), stop = std::log10(hi);
  const int count = static_cast<int>(std::lround((stop - start) * per_decade));
  for (int i = 0; i <= count; ++i) out.push_back(std::pow(10.0, start + (stop - start) * i / count));
  return out;
}

inline std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

inline CheckResult constants() {
  const BeamConstants& bc = beam_constants(1);
  const double c4 = std::pow(bc.c, 4);
  const bool ok = std::abs(bc.c - reference::kC1) <= 1e-5 &&
                  std::abs(bc.d - reference::kD1) <= 1e-5 &&
                  std::abs(c4 - reference::kC1Fourth) <= 5e-3;
  return {"constants", ok, "c1=" + fmt(bc.c, 9) + " d1=" + fmt(bc.d, 9) + " c1^4=" + fmt(c4, 9)};
}

inline CheckResult bounds_table() {
  bool ok = true;
  std::string worst;
  for (const auto& e : reference::kBoundsTable) {
    const BoundsRow row = bounds_row(e.h);
    const bool row_ok = std::abs(row.lambda1 - e.lambda1) <= e.lambda1_ulp &&
                        std::abs(row.nu1 - e.nu1) <= e.nu1_ulp &&
                        std::abs(row.pct_err - e.pct_err) <= 1e-3;
    if (!row_ok) {
      ok = false;
      worst += "h=" + fmt(e.h) + " ";
    }
  }
  return {"bounds_table", ok, ok ? "9 rows within printed precision" : "mismatch at " + worst};
}

inline CheckResult negativity_table() {
  bool ok = true;
  std::string worst;
  for (const auto& e : reference::kNegativityTable) {
    const double l2 = neg_part_bounds(e.h).l2;
    if (std::abs(l2 - e.l2_bound) > 1e-4) {
      ok = false;
      worst += "h=" + fmt(e.h) + " ";
    }
  }
  return {"negativity_table", ok, ok ? "7 rows within 1e-4" : "mismatch at " + worst};
}

inline CheckResult residuals() {
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (double alpha : log_grid(1e-6, 1e6, 4)) worst = std::max(worst, std::abs(rho(n, alpha).residual));
  }
  return {"characteristic_residual", worst <= 1e-10, "max |residual|=" + fmt(worst, 3)};
}

inline CheckResult derivative_bounds() {
  const BeamConstants& bc = beam_constants(1);
  const double upper = 2.0 * bc.d * bc.c * bc.c;
  bool ok = true;
  double prev = upper;
  for (double alpha : log_grid(1e-6, 1e6, 4)) {
    const double slope = rho_prime(1, alpha);
    ok = ok && slope >= 2.0 * pi2 && slope <= upper && slope <= prev + 1e-12 * upper;
    prev = slope;
  }
  return {"rho1_prime_bounds", ok, "2pi^2 <= rho1' <= 2 d1 c1^2, non-increasing"};
}

inline CheckResult concavity() {
  bool ok = true;
  double worst = -1.0;
  for (double alpha : log_grid(1e-2, 1e5, 4)) {
    const double step = 1e-2 * alpha;
    const double second = rho(1, alpha + step).rho - 2.0 * rho(1, alpha).rho + rho(1, alpha - step).rho;
    worst = std::max(worst, second);
    ok = ok && second <= 1e-8 && rho(1, alpha + step).rho > rho(1, alpha).rho;
  }
  return {"rho1_concave", ok, "max second difference=" + fmt(worst, 3)};
}

inline CheckResult greens_positive() {
  bool ok = true;
  for (double a : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    const GreensKernel kernel(a);
    for (int i = 1; i < 50; ++i) {
      for (int j = 1; j < 50; ++j) ok = ok && kernel.G(i / 50.0, j / 50.0) > 0.0;
    }
  }
  return {"greens_positive", ok, "a in {0.5,1,2,5,10,50}, 49x49 interior grid"};
}

inline CheckResult beam_modes() {
  double worst = 0.0;
  std::vector<BeamMode> modes{BeamMode(1), BeamMode(2), BeamMode(3)};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double ip = integrate([&](double x) { return modes[i](x) * modes[j](x); }, 0.0, 1.0);
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
    const auto& bc = modes[i].constants();
    worst = std::max(worst, std::abs(beam_mode_norms(modes[i]).grad_sq - bc.d * bc.c * bc.c));
  }
  return {"beam_modes", worst <= 1e-6, "orthonormality and ||g'||^2=d c^2, max defect=" + fmt(worst, 3)};
}

inline CheckResult beta_sandwich() {
  bool ok = true;
  for (int n : {1, 2}) {
    for (double alpha : {1e3, 1e4, 1e5}) ok = ok && beta_window(n, alpha).contains(rho(n, alpha).beta);
  }
  return {"beta_sandwich", ok, "n in {1,2}, alpha in {1e3,1e4,1e5}"};
}

inline CheckResult oracle_enclosure() {
  bool ok = true;
  std::string detail;
  for (double h : {1.0, 2.0, 3.0, 5.0}) {
    const OracleReport r = oracle_report(h, 14, 14);
    ok = ok && r.enclosure_ok;
    detail += "h=" + fmt(h) + ":" + fmt(r.mu1_estimate, 9) + " ";
  }
  const double square = biharmonic_mu(1.0, 14, 14, 1, Sector::even).front();
  ok = ok && std::abs(square - 1294.934) <= 0.05;
  return {"oracle_enclosure", ok, detail};
}

inline CheckResult asymptotic_limits() {
  const double h = 200.0;
  const AsymptoticReport a = asymptotics(h);
  const double h3 = h * h * h;
  const double lam = (lambda_n(h, 1) - a.mu1_asym) * h3;
  const double nu = (nu1(h).nu1 - a.mu1_asym) * h3;
  const double lam_target = 4.0 * std::numbers::sqrt2 * pi2 * pi;
  const BeamConstants& bc = beam_constants(1);
  const double nu_target = 4.0 * std::numbers::sqrt2 * pi2 * std::sqrt(bc.d) * bc.c;
  const bool ok = std::abs(lam / lam_target - 1.0) <= 0.03 && std::abs(nu / nu_target - 1.0) <= 0.03;
  return {"asymptotic_h3", ok, "lambda1:" + fmt(lam) + "/" + fmt(lam_target) + " nu1:" + fmt(nu) + "/" + fmt(nu_target)};
}

inline CheckResult square_negativity() {
  const NegativityMeasurement m = groundstate_negativity(1.0, 14, 14, 201);
  const bool ok = m.l2_ratio > 0.0 && m.l2_ratio <= 0.0484;
  return {"square_negativity", ok, "||f-||/||f||=" + fmt(m.l2_ratio, 3)};
}

}  // namespace verify

inline std::vector<CheckResult> run_verification(VerifyLevel level) {
  std::vector<std::function<CheckResult()>> checks{
      verify::constants, verify::bounds_table,     verify::negativity_table,
      verify::residuals, verify::derivative_bounds, verify::concavity,
      verify::greens_positive, verify::beam_modes, verify::beta_sandwich};
  if (level == VerifyLevel::full) {
    checks.insert(checks.end(), {verify::oracle_enclosure, verify::asymptotic_limits,
                                 verify::square_negativity});
  }
  std::vector<CheckResult> out;
  out.reserve(checks.size());
  for (const auto& check : checks) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      out.push_back({"exception", false, e.what()});
    }
  }
  return out;
}

}  // namespace cplate
