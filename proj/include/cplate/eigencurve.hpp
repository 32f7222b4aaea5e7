#pragma once

// Eigenvalue curves of the clamped 1D operator u'''' - 2*alpha*u'' on [0, 1].
//
// For alpha > 0 the n-th eigenvalue is rho = beta^2 - alpha^2 where beta > alpha
// is the n-th root of
//
//   cosh(sqrt(beta+alpha)) cos(sqrt(beta-alpha))
//     - alpha/sqrt(beta^2-alpha^2) sinh(sqrt(beta+alpha)) sin(sqrt(beta-alpha)) = 1.
//
// Internally the root is carried as the gap s = beta - alpha, which keeps full
// relative precision in rho = s*(2*alpha + s) when alpha is large.

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cplate/numerics.hpp"

namespace cplate {

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi2 = pi * pi;
inline constexpr double pi4 = pi2 * pi2;

/// Constants of the n-th clamped-beam mode: c solves cosh(c) cos(c) = 1,
/// d is the gradient-energy coefficient (||g_n'||^2 = d c^2),
/// gamma = cosh c - cos c and delta = sinh c - sin c.
struct BeamConstants {
  int n = 0;
  double c = 0.0;
  double d = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

namespace detail {

inline constexpr int kMaxBeamMode = 200;  // cosh(c_n) overflows past n ~ 225

inline BeamConstants compute_beam_constants(int n) {
  auto reduced = [](double c) { return std::cos(c) - 1.0 / std::cosh(c); };
  const double nn = static_cast<double>(n);
  const double c = find_root(
      reduced, make_bracket(reduced, (nn + 0.25) * pi, (nn + 0.75) * pi), 0.0, 1e-15);

  const double th = std::tanh(c);
  const double t = std::tan(c);
  double d;
  if (std::abs(t) > 10.0) {
    const double ratio = th / t;
    d = (2.0 * th - c * ratio - c) / (c * ratio - c);
  } else {
    d = (2.0 * th * t - c * th - c * t) / (c * th - c * t);
  }
  return BeamConstants{n, c, d, std::cosh(c) - std::cos(c), std::sinh(c) - std::sin(c)};
}

inline const std::array<BeamConstants, kMaxBeamMode>& beam_constant_table() {
  static const auto table = [] {
    std::array<BeamConstants, kMaxBeamMode> t{};
    for (int n = 1; n <= kMaxBeamMode; ++n) t[n - 1] = compute_beam_constants(n);
    return t;
  }();
  return table;
}

}  // namespace detail

inline const BeamConstants& beam_constants(int n) {
  if (n < 1 || n > detail::kMaxBeamMode) {
    throw std::invalid_argument("beam_constants: mode index must be in [1, " +
                                std::to_string(detail::kMaxBeamMode) + "]");
  }
  return detail::beam_constant_table()[static_cast<std::size_t>(n - 1)];
}

/// The characteristic defect divided by cosh(sqrt(beta+alpha)), written in
/// the gap variable s = beta - alpha > 0. Bounded for every alpha, so it is
/// what the root finder and the residual checks use.
inline double reduced_characteristic(double alpha, double gap) {
  const double A = std::sqrt(2.0 * alpha + gap);
  const double B = std::sqrt(gap);
  const double q = alpha / (A * B);
  return std::cos(B) - q * std::tanh(A) * std::sin(B) - 1.0 / std::cosh(A);
}

/// Characteristic defect at (alpha, beta). Returned unscaled while
/// beta + alpha <= 700 and divided by cosh(sqrt(beta+alpha)) beyond that;
/// the sign is the same either way.
inline double characteristic(double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta > alpha)) {
    throw std::invalid_argument("characteristic: requires beta > alpha >= 0");
  }
  const double gap = beta - alpha;
  if (beta + alpha > 700.0) return reduced_characteristic(alpha, gap);
  const double A = std::sqrt(beta + alpha);
  const double B = std::sqrt(gap);
  const double q = alpha / (A * B);
  return std::cosh(A) * std::cos(B) - q * std::sinh(A) * std::sin(B) - 1.0;
}

struct EigencurveResult {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double rho = 0.0;
  double gap = 0.0;       // beta - alpha, carried exactly
  double residual = 0.0;  // reduced characteristic at the root
};

namespace detail {

inline double scan_upper_limit(int n) {
  const double c = beam_constants(n).c;
  const double np1 = static_cast<double>(n + 1);
  return np1 * np1 * pi2 + 4.0 * c * c;
}

// n-th root in the gap variable. The reduced characteristic is negative on
// (0, first root) for every alpha >= 0, so the scan starts from a known
// negative sign instead of sampling the 0/0-prone point s -> 0.
inline double solve_gap(int n, double alpha) {
  constexpr int kNodes = 400;
  const double eps = 1e-9 * (1.0 + alpha);
  auto f = [alpha](double s) { return reduced_characteristic(alpha, s); };

  double upper = scan_upper_limit(n);
  for (int attempt = 0; attempt < 4; ++attempt, upper *= 2.0) {
    int found = 0;
    double prev_s = eps;
    bool prev_negative = true;
    double prev_f = -1.0;
    for (int i = 1; i <= kNodes; ++i) {
      const double s = upper * static_cast<double>(i) / kNodes;
      const double fs = f(s);
      const bool negative = fs < 0.0;
      if (negative != prev_negative) {
        if (++found == n) {
          Bracket br{prev_s, s, i == 1 ? f(prev_s) : prev_f, fs};
          if (!br.valid()) br.f_lo = negative ? 1.0 : -1.0;
          return find_root(f, br, 0.0, 1e-15);
        }
      }
      prev_s = s;
      prev_f = fs;
      prev_negative = negative;
    }
  }
  std::ostringstream os;
  os << "rho: root " << n << " not bracketed for alpha=" << alpha
     << " on gap range (0, " << upper / 2.0 << "]";
  throw NumericalError(os.str());
}

}  // namespace detail

/// n-th eigenvalue of H(1, alpha), alpha >= 0.
inline EigencurveResult rho(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("rho: mode index must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("rho: requires alpha >= 0");

  double gap;
  if (alpha == 0.0) {
    const double c = beam_constants(n).c;
    gap = c * c;
  } else {
    gap = detail::solve_gap(n, alpha);
  }
  EigencurveResult r;
  r.n = n;
  r.alpha = alpha;
  r.gap = gap;
  r.beta = alpha + gap;
  r.rho = gap * (2.0 * alpha + gap);
  r.residual = reduced_characteristic(alpha, gap);
  return r;
}

/// n-th eigenvalue of H(h, alpha) on [0, h], via the scaling
/// sigma(h, alpha, n) = rho_n(h^2 alpha) h^-4.
inline double sigma(double h, double alpha, int n) {
  if (!(h > 0.0)) throw std::invalid_argument("sigma: requires h > 0");
  const double h2 = h * h;
  return rho(n, h2 * alpha).rho / (h2 * h2);
}

namespace detail {

// Partial derivatives of reduced_characteristic with respect to alpha (gap
// held fixed) and to the gap. In terms of the (alpha, beta) partials F1, F2:
// d/dalpha = F1 + F2 and d/dgap = F2.
struct CharacteristicPartials {
  double d_alpha;
  double d_gap;
  double q;
};

inline CharacteristicPartials characteristic_partials(double alpha, double gap) {
  const double A = std::sqrt(2.0 * alpha + gap);
  const double B = std::sqrt(gap);
  const double A3 = A * A * A;
  const double q = alpha / (A * B);
  const double T = std::tanh(A);
  const double sech = 1.0 / std::cosh(A);
  const double sech2 = sech * sech;
  const double sB = std::sin(B);
  const double cB = std::cos(B);

  const double A_a = 1.0 / A;
  const double A_s = 0.5 / A;
  const double B_s = 0.5 / B;
  const double q_a = 1.0 / (A * B) - alpha / (A3 * B);
  const double q_s = -0.5 * alpha / (A3 * B) - 0.5 * alpha / (A * B * gap);

  const double d_alpha = -(q_a * T + q * sech2 * A_a) * sB + sech * T * A_a;
  const double d_gap = -sB * B_s - (q_s * T + q * sech2 * A_s) * sB -
                       q * T * cB * B_s + sech * T * A_s;
  return {d_alpha, d_gap, q};
}

}  // namespace detail

/// rho_n'(alpha) by implicit differentiation of the characteristic equation:
/// beta' = 1 - (F1 + F2)/F2 and rho' = 2 beta beta' - 2 alpha, evaluated as
/// 2 s + 2 beta s' with s' = beta' - 1 to avoid cancelling two O(alpha) terms.
inline double rho_prime(int n, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("rho_prime: requires alpha > 0");
  const EigencurveResult r = rho(n, alpha);
  const auto p = detail::characteristic_partials(alpha, r.gap);
  if (std::abs(p.d_gap) < 1e-14 * (1.0 + std::abs(p.q))) {
    throw NumericalError("rho_prime: characteristic derivative vanishes at the root");
  }
  const double gap_prime = -p.d_alpha / p.d_gap;
  return 2.0 * r.gap + 2.0 * r.beta * gap_prime;
}

enum class Regime { small, large };

struct AsymptoticValue {
  double rho;
  double rho_prime;
};

/// Leading terms of rho_n and rho_n' as alpha -> 0 (small) or alpha -> inf (large).
inline AsymptoticValue rho_asymptotic(int n, double alpha, Regime regime) {
  if (regime == Regime::small) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("rho_asymptotic: small regime needs alpha >= 0");
    const BeamConstants& bc = beam_constants(n);
    const double c2 = bc.c * bc.c;
    return {c2 * c2 + 2.0 * bc.d * c2 * alpha, 2.0 * bc.d * c2};
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("rho_asymptotic: large regime needs alpha > 0");
  const double n2pi2 = static_cast<double>(n) * n * pi2;
  const double root = std::sqrt(alpha);
  return {2.0 * n2pi2 * alpha + 4.0 * std::numbers::sqrt2 * n2pi2 * root,
          2.0 * n2pi2 + 2.0 * std::numbers::sqrt2 * n2pi2 / root};
}

/// Large-alpha window around the n-th root beta_n(alpha):
/// alpha + n^2 pi^2 + 2 sqrt2 n^2 pi^2 alpha^-1/2 + 6 n^2 pi^2 alpha^-1
///   -/+ (5 sqrt2 / 6) (-1)^n n^4 pi^4 alpha^-3/2.
/// For alpha large enough beta_n lies strictly between the two ends; which
/// end is smaller depends on the parity of n.
struct BetaWindow {
  double minus;  // correction term subtracted
  double plus;   // correction term added
  [[nodiscard]] bool contains(double beta) const {
    return std::min(minus, plus) < beta && beta < std::max(minus, plus);
  }
};

inline BetaWindow beta_window(int n, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("beta_window: requires alpha > 0");
  const double nn = static_cast<double>(n);
  const double n2pi2 = nn * nn * pi2;
  const double base = alpha + n2pi2 + 2.0 * std::numbers::sqrt2 * n2pi2 / std::sqrt(alpha) +
                      6.0 * n2pi2 / alpha;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double corr = sign * 5.0 * std::numbers::sqrt2 * nn * nn * nn * nn * pi4 /
                      (6.0 * alpha * std::sqrt(alpha));
  return {base - corr, base + corr};
}

}  // namespace cplate
