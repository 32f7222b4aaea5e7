#pragma once

#include <cmath>
#include <stdexcept>

#include "cplate/eigencurve.hpp"
#include "cplate/numerics.hpp"

namespace cplate {

/// Clamped-beam eigenfunction on [0, 1]:
///   g_n(x) = cosh(c x) - (gamma/delta) sinh(c x) - cos(c x) + (gamma/delta) sin(c x).
/// The hyperbolic pair is stored as e^{cx}(1 - r)/2 + e^{-cx}(1 + r)/2 with
/// 1 - r = (cos c - sin c - e^{-c})/delta, so nothing cancels for large c.
class BeamMode {
 public:
  explicit BeamMode(int n)
      : constants_(beam_constants(n)),
        ratio_(constants_.gamma / constants_.delta),
        one_minus_ratio_((std::cos(constants_.c) - std::sin(constants_.c) -
                          std::exp(-constants_.c)) /
                         constants_.delta) {}

  [[nodiscard]] int n() const { return constants_.n; }
  [[nodiscard]] const BeamConstants& constants() const { return constants_; }

  /// d^order/dx^order g_n at x, order in [0, 4].
  [[nodiscard]] double derivative(double x, int order) const {
    const double c = constants_.c;
    const double cx = c * x;
    const double grow = 0.5 * std::exp(cx) * one_minus_ratio_;
    const double decay = 0.5 * std::exp(-cx) * (1.0 + ratio_);
    const double cs = std::cos(cx);
    const double sn = std::sin(cx);
    const double p = grow + decay;          // cosh - r sinh
    const double q = grow - decay;          // sinh - r cosh
    const double u = -cs + ratio_ * sn;     // -cos + r sin
    const double v = sn + ratio_ * cs;      // (d/dx u) / c
    switch (order) {
      case 0: return p + u;
      case 1: return c * (q + v);
      case 2: return c * c * (p - u);
      case 3: return c * c * c * (q - v);
      case 4: return c * c * c * c * (p + u);
      default: throw std::invalid_argument("BeamMode::derivative: order must be in [0, 4]");
    }
  }

  [[nodiscard]] double operator()(double x) const { return derivative(x, 0); }

 private:
  BeamConstants constants_;
  double ratio_;
  double one_minus_ratio_;
};

inline double beam_mode_eval(const BeamMode& mode, double x) { return mode(x); }

struct BeamNorms {
  double l2_norm;
  double grad_sq;  // ||g_n'||_2^2, equal to d_n c_n^2
};

inline BeamNorms beam_mode_norms(const BeamMode& mode) {
  const int panels = std::max(tolerance::quad_panels, mode.n() / 2 + 1);
  const double sq = integrate([&](double x) { const double g = mode(x); return g * g; },
                              0.0, 1.0, tolerance::quad_order, panels);
  const double grad = integrate(
      [&](double x) { const double g = mode.derivative(x, 1); return g * g; }, 0.0, 1.0,
      tolerance::quad_order, panels);
  return {std::sqrt(sq), grad};
}

/// Energy of the separable trial state sqrt(2/h) sin(pi x/h) g_1(y) on [0,h]x[0,1].
inline double hartree_energy(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("hartree_energy: requires h > 0");
  const BeamConstants& bc = beam_constants(1);
  const double c2 = bc.c * bc.c;
  const double h2 = h * h;
  return c2 * c2 + 2.0 * bc.d * c2 * pi2 / h2 + pi4 / (h2 * h2);
}

inline double separable_groundstate(double h, double x, double y) {
  if (!(h > 0.0)) throw std::invalid_argument("separable_groundstate: requires h > 0");
  static const BeamMode g1(1);
  return std::numbers::sqrt2 / std::sqrt(h) * std::sin(pi * x / h) * g1(y);
}

}  // namespace cplate
