#pragma once

// Green's function of d^4/dx^4 - a^2 d^2/dx^2 on [0, 1] with clamped ends.
// H(1, alpha) corresponds to a^2 = 2 alpha; H(h, alpha) reduces to [0, 1]
// with a = sqrt(2 alpha) h.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cplate/numerics.hpp"

namespace cplate {

class GreensKernel {
 public:
  // Past this point k and c are evaluated with e^a divided out; the direct
  // four-term form loses about a/ln(10) digits to cancellation.
  static constexpr double kScaledThreshold = 15.0;

  explicit GreensKernel(double a) : a_(a) {
    if (!(a > 0.0)) throw std::invalid_argument("GreensKernel: requires a > 0");
    const double a3 = a * a * a;
    c_norm_ = a3 * (2.0 * (1.0 - std::cosh(a)) + a * std::sinh(a));
    const double inv_e = std::exp(-a);
    c_scaled_ = a3 * (2.0 * inv_e - 1.0 - inv_e * inv_e + 0.5 * a * (1.0 - inv_e * inv_e));
  }

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double c_norm() const { return c_norm_; }

  /// k(x, y) exactly as the four-term combination; may overflow for a > ~350.
  [[nodiscard]] double k(double x, double y) const {
    if (a_ > kScaledThreshold) return std::exp(a_) * k_scaled(x, y);
    return k_direct(x, y);
  }

  [[nodiscard]] double G(double x, double y) const {
    const bool lower = y <= x;
    const double u = lower ? 1.0 - x : x;
    const double v = lower ? y : 1.0 - y;
    if (a_ > kScaledThreshold) return k_scaled(u, v) / c_scaled_;
    return k_direct(u, v) / c_norm_;
  }

 private:
  [[nodiscard]] double k_direct(double x, double y) const {
    const double a = a_;
    const double ax = a * x, ay = a * y;
    const double cm1_a = std::cosh(a) - 1.0;
    const double cm1_x = std::cosh(ax) - 1.0, cm1_y = std::cosh(ay) - 1.0;
    const double sm_x = std::sinh(ax) - ax, sm_y = std::sinh(ay) - ay;
    return (std::sinh(a) - a) * cm1_x * cm1_y - cm1_a * cm1_x * sm_y -
           cm1_a * sm_x * cm1_y + std::sinh(a) * sm_x * sm_y;
  }

  // k(x, y) e^{-a}, expanded in exponentials with the e^{a+ax+ay} terms
  // cancelled symbolically. Every surviving exponent is <= 0 for x + y <= 1.
  [[nodiscard]] double k_scaled(double x, double y) const {
    const double a = a_;
    const double u = a * x, v = a * y;
    const double ie = std::exp(-a), ix = std::exp(-u), iy = std::exp(-v);
    const double xe = std::exp(u - a), ye = std::exp(v - a);
    const double xye = std::exp(u + v - a), xye2 = std::exp(u + v - 2.0 * a);

    double t = 0.5 * (u - 1.0) * (v - 1.0) + 0.5 * (u - 1.0) * iy + 0.5 * (v - 1.0) * ix +
               0.5 * ix * iy;
    t += xe * (0.5 * a - 0.5 * v - 0.5 - 0.25 * a * iy) + xye * (0.5 - 0.25 * a);
    t += ye * (0.5 * a - 0.5 * u - 0.5) + (u + v - a) * ie + (0.5 * a - 0.5 * u + 0.5) * iy * ie;
    t += (0.5 * a - 0.5 * v + 0.5 - 0.25 * a * iy - 0.5 * iy) * ix * ie - 0.25 * a * ye * ix;
    t += -0.5 * xye2 + xe * ie * (0.5 * v + 0.5) + ye * ie * (0.5 * u + 0.5) -
         (0.5 * u * v + 0.5 * u + 0.5 * v + 0.5) * ie * ie;
    return t;
  }

  double a_;
  double c_norm_;
  double c_scaled_;  // c e^{-a}
};

inline double k_eval(const GreensKernel& kernel, double x, double y) { return kernel.k(x, y); }
inline double greens_eval(const GreensKernel& kernel, double x, double y) {
  return kernel.G(x, y);
}

/// phi(x) = artanh((sinh x - x)/(cosh x - 1)), x > 0.
inline double phi(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("phi: requires x > 0");
  if (x < 1e-4) return x / 3.0 + x * x * x / 810.0;
  if (x > 700.0) return 0.5 * (x - std::log(x - 1.0));
  const double half = std::sinh(0.5 * x);
  const double cosh_m1 = 2.0 * half * half;
  double sinh_m = 0.0;  // sinh x - x
  if (x < 0.5) {
    double term = x * x * x / 6.0;
    for (int k = 2; term > 1e-18 * sinh_m; ++k) {
      sinh_m += term;
      term *= x * x / ((2.0 * k) * (2.0 * k + 1.0));
    }
  } else {
    sinh_m = std::sinh(x) - x;
  }
  const double r = sinh_m / cosh_m1;
  if (r < 0.5) return std::atanh(r);
  // 1 - r = (e^{-x} - 1 + x)/(cosh x - 1) keeps digits when r is close to 1.
  const double m = (std::expm1(-x) + x) / cosh_m1;
  return 0.5 * std::log((2.0 - m) / m);
}

struct SampledFunction {
  std::vector<double> x;
  std::vector<double> f;
};

/// f(x) = int_0^1 G(x, y) g(y) dy on the uniform grid x_i = i / grid_size.
/// The integral is split at y = x_i where G has a derivative jump.
inline SampledFunction apply_inverse(const GreensKernel& kernel,
                                     const std::function<double(double)>& g,
                                     int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("apply_inverse: grid_size must be >= 16");
  SampledFunction out;
  out.x.resize(static_cast<std::size_t>(grid_size) + 1);
  out.f.resize(out.x.size());
  for (int i = 0; i <= grid_size; ++i) {
    const double xi = static_cast<double>(i) / grid_size;
    auto integrand = [&](double y) { return kernel.G(xi, y) * g(y); };
    out.x[static_cast<std::size_t>(i)] = xi;
    out.f[static_cast<std::size_t>(i)] =
        integrate(integrand, 0.0, xi, tolerance::quad_order, 4) +
        integrate(integrand, xi, 1.0, tolerance::quad_order, 4);
  }
  return out;
}

}  // namespace cplate
