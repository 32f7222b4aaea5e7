#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cplate {

/// Raised when a numerical procedure cannot deliver a result (no bracket,
/// ill-conditioned derivative, solver failure).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The function values at the two ends of the interval have the same sign.
class BracketError : public NumericalError {
 public:
  BracketError(double lo, double hi, double f_lo, double f_hi)
      : NumericalError(describe(lo, hi, f_lo, f_hi)) {}

 private:
  static std::string describe(double lo, double hi, double f_lo, double f_hi) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << f_lo
       << ", f(hi)=" << f_hi;
    return os.str();
  }
};

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  [[nodiscard]] bool valid() const {
    return lo < hi && !(f_lo * f_hi > 0.0) && std::isfinite(f_lo) &&
           std::isfinite(f_hi);
  }
};

template <class F>
Bracket make_bracket(F&& f, double lo, double hi) {
  return Bracket{lo, hi, f(lo), f(hi)};
}

namespace tolerance {
inline constexpr double root_abs = 1e-13;
inline constexpr double root_rel = 1e-13;
inline constexpr int quad_order = 32;
inline constexpr int quad_panels = 8;
}  // namespace tolerance

// Brent's zero finder: inverse quadratic interpolation and secant steps,
// falling back to bisection whenever the interpolant leaves the bracket or
// converges too slowly. Terminates once the bracket is narrower than
// max(tol_abs, tol_rel*|x|) or an exact zero is hit.
template <class F>
double find_root(F&& f, Bracket bracket, double tol_abs = tolerance::root_abs,
                 double tol_rel = tolerance::root_rel, int max_iter = 300) {
  if (!bracket.valid()) {
    throw BracketError(bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi);
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();

  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  double c = a, fc = fa;
  double d = b - a, e = d;

  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol =
        2.0 * eps * std::abs(b) + 0.5 * std::max(tol_abs, tol_rel * std::abs(b));
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  throw NumericalError("find_root: iteration limit reached");
}

/// Gauss-Legendre nodes and weights on (-1, 1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  const auto n = static_cast<std::size_t>(order);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess for the i-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// Composite Gauss-Legendre rule on [a, b] with `panels` equal sub-intervals.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline CompositeRule composite_rule(double a, double b,
                                    int order = tolerance::quad_order,
                                    int panels = tolerance::quad_panels) {
  const QuadratureRule base = gauss_legendre(order);
  CompositeRule out;
  out.nodes.reserve(base.nodes.size() * static_cast<std::size_t>(panels));
  out.weights.reserve(out.nodes.capacity());
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
      out.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
      out.weights.push_back(0.5 * width * base.weights[i]);
    }
  }
  return out;
}

template <class F>
double integrate(F&& f, double a, double b, int order = tolerance::quad_order,
                 int panels = tolerance::quad_panels) {
  if (a == b) return 0.0;
  const CompositeRule rule = composite_rule(a, b, order, panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(rule.nodes[i]);
  }
  return sum;
}

template <class F>
double central_diff(F&& f, double x, double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

/// Eigenpairs of a dense symmetric matrix, eigenvalues ascending; column j of
/// `vectors` belongs to `values[j]`.
struct SymEig {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

inline SymEig sym_eig(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("sym_eig: matrix is not square");
  }
  const double scale = matrix.cwiseAbs().maxCoeff();
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, std::numeric_limits<double>::min())) {
    throw std::invalid_argument("sym_eig: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("sym_eig: eigensolver did not converge");
  }
  return SymEig{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace cplate
