#pragma once

// Lower bounds lambda_n(h), the separable (Hartree) upper bound nu_1(h), the
// groundstate negativity bounds and the large-h expansions for the first
// clamped-plate eigenvalue mu_1(h) on the rectangle [0, h] x [0, 1].

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cplate/eigencurve.hpp"
#include "cplate/numerics.hpp"

namespace cplate {

/// Below this argument rho_1 and rho_1' come from the small-alpha expansion.
inline constexpr double kSmallAlpha = 1e-8;

inline double rho1(double alpha) {
  if (alpha < kSmallAlpha) return rho_asymptotic(1, alpha, Regime::small).rho;
  return rho(1, alpha).rho;
}

inline double rho1_prime(double alpha) {
  if (alpha < kSmallAlpha) return rho_asymptotic(1, alpha, Regime::small).rho_prime;
  return rho_prime(1, alpha);
}

namespace detail {
inline double rho_n_safe(int n, double alpha) {
  if (alpha < kSmallAlpha) return rho_asymptotic(n, alpha, Regime::small).rho;
  return rho(n, alpha).rho;
}
inline void require_positive_h(double h, const char* who) {
  if (!(h > 0.0)) throw std::invalid_argument(std::string(who) + ": requires h > 0");
}
}  // namespace detail

/// lambda_n(h) = rho_n(pi^2 h^2) h^-4 + rho_1(pi^2 h^-2) - 2 pi^4 h^-2.
/// n = 1 bounds mu_1 from below; n = 2 is the curve of the same form.
inline double lambda_n(double h, int n) {
  detail::require_positive_h(h, "lambda_n");
  const double h2 = h * h;
  return detail::rho_n_safe(n, pi2 * h2) / (h2 * h2) + rho1(pi2 / h2) - 2.0 * pi4 / h2;
}

struct Lambda3Branches {
  double mode12;  // rho_1(pi^2 h^2) h^-4 + rho_2(pi^2 h^-2) - 2 pi^4 h^-2
  double mode31;  // rho_3(pi^2 h^2) h^-4 + rho_1(pi^2 h^-2) - 2 pi^4 h^-2
  [[nodiscard]] double min() const { return std::min(mode12, mode31); }
};

inline Lambda3Branches lambda3_branches(double h) {
  detail::require_positive_h(h, "lambda3");
  const double h2 = h * h;
  const double h4 = h2 * h2;
  const double shift = 2.0 * pi4 / h2;
  return {detail::rho_n_safe(1, pi2 * h2) / h4 + detail::rho_n_safe(2, pi2 / h2) - shift,
          detail::rho_n_safe(3, pi2 * h2) / h4 + detail::rho_n_safe(1, pi2 / h2) - shift};
}

/// Lower bound on the third eigenvalue mu_3(h).
inline double lambda3(double h) { return lambda3_branches(h).min(); }

struct UpperBound {
  double nu1 = 0.0;
  double alpha_g = 0.0;  // ||g'||^2 of the optimal y-factor
  double alpha_f = 0.0;  // ||f'||^2 of the optimal x-factor
  int root_count = 0;    // sign changes of the fixed-point residual seen by the scan
};

/// Residual of the fixed-point condition 2 alpha = rho_1'(rho_1'(h^2 alpha) h^-2 / 2).
inline double fixed_point_residual(double h, double alpha) {
  const double h2 = h * h;
  return rho1_prime(0.5 * rho1_prime(h2 * alpha) / h2) - 2.0 * alpha;
}

namespace detail {
inline double nu_value(double h, double alpha_g, double* alpha_f_out) {
  const double h2 = h * h;
  const double slope = rho1_prime(h2 * alpha_g);
  const double alpha_f = 0.5 * slope / h2;
  if (alpha_f_out) *alpha_f_out = alpha_f;
  return rho1(h2 * alpha_g) / (h2 * h2) + rho1(alpha_f) - slope / h2 * alpha_g;
}
}  // namespace detail

/// Separable upper bound nu_1(h) >= mu_1(h). The optimal alpha_g lies in
/// [pi^2, d_1 c_1^2]; the bracket is scanned at 64 sub-intervals and, if the
/// residual changes sign more than once, the root giving the smallest nu_1 wins.
inline UpperBound nu1(double h) {
  detail::require_positive_h(h, "nu1");
  const BeamConstants& bc = beam_constants(1);
  const double lo = pi2;
  const double hi = bc.d * bc.c * bc.c;
  auto r = [h](double alpha) { return fixed_point_residual(h, alpha); };

  constexpr int kScan = 64;
  std::vector<double> nodes(kScan + 1), values(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    nodes[i] = lo + (hi - lo) * static_cast<double>(i) / kScan;
    values[i] = r(nodes[i]);
  }

  UpperBound best;
  best.nu1 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const Bracket br{nodes[i], nodes[i + 1], values[i], values[i + 1]};
    const bool at_zero = values[i] == 0.0 && i > 0;  // counted by previous cell
    if (!br.valid() || at_zero) continue;
    ++best.root_count;
    const double alpha_g = find_root(r, br, 1e-15, 1e-15);
    double alpha_f = 0.0;
    const double value = detail::nu_value(h, alpha_g, &alpha_f);
    if (value < best.nu1) {
      best.nu1 = value;
      best.alpha_g = alpha_g;
      best.alpha_f = alpha_f;
    }
  }
  if (best.root_count == 0) {
    throw NumericalError("nu1: fixed-point residual has no sign change on [pi^2, d c^2] for h=" +
                         std::to_string(h));
  }
  return best;
}

/// Vacuous negativity bound: lambda_3 <= nu_1.
class VacuousBoundError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

struct NegativityBounds {
  double l2;    // bound on ||f_1^-||_2 / ||f_1||_2
  double linf;  // bound on ||f_1^-||_inf / ||f_1||_2
};

inline NegativityBounds negativity_from(double lambda1, double nu, double lambda_3) {
  if (!(lambda_3 > nu)) {
    throw VacuousBoundError("negativity bound is vacuous: lambda3 <= nu1");
  }
  const double num = std::sqrt(nu - lambda1);
  const double den = std::sqrt(lambda_3 - nu);
  return {num / den, num * std::pow(lambda_3, 0.25) / (2.0 * den)};
}

inline NegativityBounds neg_part_bounds(double h) {
  detail::require_positive_h(h, "neg_part_bounds");
  return negativity_from(lambda_n(h, 1), nu1(h).nu1, lambda3(h));
}

struct BoundsRow {
  double h = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double nu1 = 0.0;
  double alpha_g = 0.0;
  double alpha_f = 0.0;
  double pct_err = 0.0;  // 100 (nu1 - lambda1) / lambda1
  std::optional<NegativityBounds> negativity;  // empty when lambda3 <= nu1
};

inline BoundsRow bounds_row(double h) {
  detail::require_positive_h(h, "bounds_row");
  BoundsRow row;
  row.h = h;
  row.lambda1 = lambda_n(h, 1);
  row.lambda2 = lambda_n(h, 2);
  row.lambda3 = lambda3(h);
  const UpperBound ub = nu1(h);
  row.nu1 = ub.nu1;
  row.alpha_g = ub.alpha_g;
  row.alpha_f = ub.alpha_f;
  row.pct_err = 100.0 * (row.nu1 - row.lambda1) / row.lambda1;
  if (row.lambda3 > row.nu1) row.negativity = negativity_from(row.lambda1, row.nu1, row.lambda3);
  return row;
}

/// Closed-form large-h expansions built from the first beam constants.
struct AsymptoticReport {
  double h = 0.0;
  double mu1_asym = 0.0;         // c^4 + 2 d c^2 pi^2 h^-2
  double nu1_asym_h3 = 0.0;      // mu1_asym + 4 sqrt2 pi^2 d^1/2 c h^-3
  double lambda1_asym_h3 = 0.0;  // mu1_asym + 4 sqrt2 pi^3 h^-3
  double lambda3_asym = 0.0;     // c^4 + (2 d c^2 pi^2 + 16 pi^4) h^-2
  double neg_l2_asym = 0.0;      // 2^1/4 (d^1/2 c - pi)^1/2 / (2 pi) h^-1/2
  double neg_linf_asym = 0.0;    // 2^1/4 (d^1/2 c - pi)^1/2 c / (4 pi) h^-1/2
};

inline AsymptoticReport asymptotics(double h) {
  detail::require_positive_h(h, "asymptotics");
  const BeamConstants& bc = beam_constants(1);
  const double c = bc.c, d = bc.d;
  const double c2 = c * c;
  const double h2 = h * h, h3 = h2 * h;
  const double sqrt2 = std::numbers::sqrt2;
  const double quarter2 = std::pow(2.0, 0.25);
  const double gap = std::sqrt(std::sqrt(d) * c - pi);

  AsymptoticReport out;
  out.h = h;
  out.mu1_asym = c2 * c2 + 2.0 * d * c2 * pi2 / h2;
  out.nu1_asym_h3 = out.mu1_asym + 4.0 * sqrt2 * pi2 * std::sqrt(d) * c / h3;
  out.lambda1_asym_h3 = out.mu1_asym + 4.0 * sqrt2 * pi2 * pi / h3;
  out.lambda3_asym = c2 * c2 + (2.0 * d * c2 * pi2 + 16.0 * pi4) / h2;
  out.neg_l2_asym = quarter2 * gap / (2.0 * pi) / std::sqrt(h);
  out.neg_linf_asym = quarter2 * gap * c / (4.0 * pi) / std::sqrt(h);
  return out;
}

}  // namespace cplate
