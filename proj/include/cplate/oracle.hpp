#pragma once

// Rayleigh-Ritz cross-checks in a clamped-beam basis. The modes satisfy the
// clamped conditions exactly, are L2-orthonormal and diagonalise the fourth
// derivative (int g_m'' g_n'' = c_n^4 delta_mn), so only the gradient block
// int g_m' g_n' needs quadrature.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cplate/beam.hpp"
#include "cplate/bounds.hpp"
#include "cplate/numerics.hpp"

namespace cplate {

/// full: modes 1..N. even: the N modes symmetric about the midpoint
/// (1, 3, 5, ...), which span the sector holding the groundstate.
enum class Sector { full, even };

class BeamBasis {
 public:
  BeamBasis(int size, Sector sector) {
    if (size < 1) throw std::invalid_argument("BeamBasis: size must be >= 1");
    modes_.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      modes_.emplace_back(sector == Sector::even ? 2 * i + 1 : i + 1);
    }
    quartic_.resize(size);
    for (int i = 0; i < size; ++i) {
      const double c = modes_[static_cast<std::size_t>(i)].constants().c;
      quartic_(i) = c * c * c * c;
    }

    // 64-point Gauss-Legendre on 8 panels.
    const CompositeRule rule = composite_rule(0.0, 1.0, 64, 8);
    const auto q = static_cast<Eigen::Index>(rule.nodes.size());
    Eigen::MatrixXd slopes(size, q);
    for (int i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < q; ++j) {
        slopes(i, j) = modes_[static_cast<std::size_t>(i)].derivative(
            rule.nodes[static_cast<std::size_t>(j)], 1);
      }
    }
    const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), q);
    gradient_ = slopes * w.asDiagonal() * slopes.transpose();
    gradient_ = 0.5 * (gradient_ + gradient_.transpose()).eval();
  }

  [[nodiscard]] int size() const { return static_cast<int>(modes_.size()); }
  [[nodiscard]] const std::vector<BeamMode>& modes() const { return modes_; }
  /// c_m^4 for each basis mode.
  [[nodiscard]] const Eigen::VectorXd& quartic() const { return quartic_; }
  /// int_0^1 g_m' g_n'.
  [[nodiscard]] const Eigen::MatrixXd& gradient() const { return gradient_; }

  /// sum_m coeffs[m] g_m(x) on [0, 1].
  [[nodiscard]] double combine(const Eigen::Ref<const Eigen::VectorXd>& coeffs, double x) const {
    double sum = 0.0;
    for (int i = 0; i < size(); ++i) sum += coeffs(i) * modes_[static_cast<std::size_t>(i)](x);
    return sum;
  }

 private:
  std::vector<BeamMode> modes_;
  Eigen::VectorXd quartic_;
  Eigen::MatrixXd gradient_;
};

/// Galerkin matrix of H(h, alpha) in the basis h^{-1/2} g_m(x/h).
inline Eigen::MatrixXd h_operator_matrix(const BeamBasis& basis, double h, double alpha) {
  const double h2 = h * h;
  Eigen::MatrixXd k = (2.0 * alpha / h2) * basis.gradient();
  k.diagonal() += basis.quartic() / (h2 * h2);
  return k;
}

struct HOperatorEigen {
  BeamBasis basis;
  double h;
  SymEig eig;

  /// j-th Galerkin eigenfunction at x in [0, h], unit L2 norm on [0, h].
  [[nodiscard]] double eigenfunction(int j, double x) const {
    return basis.combine(eig.vectors.col(j), x / h) / std::sqrt(h);
  }
};

inline HOperatorEigen h_operator_eigenpairs(double h, double alpha, int basis_size) {
  if (!(h > 0.0)) throw std::invalid_argument("h_operator_eigs: requires h > 0");
  if (!(alpha >= 0.0)) throw std::invalid_argument("h_operator_eigs: requires alpha >= 0");
  BeamBasis basis(basis_size, Sector::full);
  SymEig eig = sym_eig(h_operator_matrix(basis, h, alpha));
  return HOperatorEigen{std::move(basis), h, std::move(eig)};
}

inline std::vector<double> h_operator_eigs(double h, double alpha, int basis_size, int k) {
  if (k < 1 || basis_size < k) {
    throw std::invalid_argument("h_operator_eigs: requires basis_size >= k >= 1");
  }
  const HOperatorEigen pairs = h_operator_eigenpairs(h, alpha, basis_size);
  return {pairs.eig.values.data(), pairs.eig.values.data() + k};
}

/// Galerkin matrix of the biharmonic operator on [0,h]x[0,1] over the product
/// basis phi_m(x) g_n(y), index m * basis_n + n:
///   A_h (x) 1 + 1 (x) A_1 + 2 B_h (x) B_1,
/// with A the diagonal fourth-derivative blocks and B the gradient blocks.
inline Eigen::MatrixXd biharmonic_matrix(const BeamBasis& xb, const BeamBasis& yb, double h) {
  const int m = xb.size(), n = yb.size();
  const double h2 = h * h;
  const Eigen::VectorXd ax = xb.quartic() / (h2 * h2);
  const Eigen::MatrixXd bx = xb.gradient() / h2;
  const Eigen::VectorXd& ay = yb.quartic();
  const Eigen::MatrixXd& by = yb.gradient();

  Eigen::MatrixXd k(m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int p = 0; p < m; ++p) {
      k.block(i * n, p * n, n, n) = 2.0 * bx(i, p) * by;
    }
    for (int j = 0; j < n; ++j) k(i * n + j, i * n + j) += ax(i) + ay(j);
  }
  return k;
}

inline void check_product_basis(double h, int basis_m, int basis_n) {
  if (!(h > 0.0)) throw std::invalid_argument("biharmonic_mu: requires h > 0");
  if (basis_m < 1 || basis_n < 1 || basis_m * basis_n > 4096) {
    throw std::invalid_argument("biharmonic_mu: basis sizes must be >= 1 with product <= 4096");
  }
}

/// Ascending Rayleigh-Ritz estimates (upper estimates) of mu_1..mu_k.
/// Sector::even only sees eigenfunctions symmetric in both directions.
inline std::vector<double> biharmonic_mu(double h, int basis_m, int basis_n, int k,
                                         Sector sector = Sector::full) {
  check_product_basis(h, basis_m, basis_n);
  if (k < 1 || k > basis_m * basis_n) throw std::invalid_argument("biharmonic_mu: bad k");
  const BeamBasis xb(basis_m, sector), yb(basis_n, sector);
  const SymEig eig = sym_eig(biharmonic_matrix(xb, yb, h));
  return {eig.values.data(), eig.values.data() + k};
}

struct NegativityMeasurement {
  double l2_ratio = 0.0;    // ||f^-||_2 / ||f||_2
  double linf_ratio = 0.0;  // ||f^-||_inf / ||f||_2
  double l2_over_linf = 0.0;  // ||f||_2 / ||f||_inf
  double mu1 = 0.0;
};

namespace detail {
inline std::vector<double> simpson_weights(int intervals, double step) {
  std::vector<double> w(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    const double base = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    w[static_cast<std::size_t>(i)] = base * step / 3.0;
  }
  return w;
}
}  // namespace detail

/// Negative part of the Rayleigh-Ritz groundstate, sign-normalised positive at
/// the centre of the rectangle. `grid` is samples per unit length; Simpson
/// weights on the sample nodes.
inline NegativityMeasurement groundstate_negativity(double h, int basis_m, int basis_n, int grid,
                                                    Sector sector = Sector::even) {
  check_product_basis(h, basis_m, basis_n);
  if (grid < 8) throw std::invalid_argument("groundstate_negativity: grid must be >= 8");
  const BeamBasis xb(basis_m, sector), yb(basis_n, sector);
  const SymEig eig = sym_eig(biharmonic_matrix(xb, yb, h));
  const Eigen::Map<const Eigen::MatrixXd> coeffs_t(eig.vectors.col(0).data(), basis_n, basis_m);

  int nx = static_cast<int>(std::lround(grid * h));
  nx += nx % 2;
  nx = std::max(nx, 8);
  const int ny = grid + grid % 2;

  Eigen::MatrixXd gx(basis_m, nx + 1), gy(basis_n, ny + 1);
  for (int i = 0; i < basis_m; ++i) {
    for (int s = 0; s <= nx; ++s) {
      gx(i, s) = xb.modes()[static_cast<std::size_t>(i)](static_cast<double>(s) / nx) / std::sqrt(h);
    }
  }
  for (int j = 0; j < basis_n; ++j) {
    for (int s = 0; s <= ny; ++s) {
      gy(j, s) = yb.modes()[static_cast<std::size_t>(j)](static_cast<double>(s) / ny);
    }
  }
  // coeffs_t(j, i) is the coefficient of phi_i(x) g_j(y).
  Eigen::MatrixXd f = gx.transpose() * coeffs_t.transpose() * gy;
  if (f(nx / 2, ny / 2) < 0.0) f = -f;

  const std::vector<double> wx = detail::simpson_weights(nx, h / nx);
  const std::vector<double> wy = detail::simpson_weights(ny, 1.0 / ny);
  double total = 0.0, negative = 0.0, neg_max = 0.0, abs_max = 0.0;
  for (int s = 0; s <= nx; ++s) {
    for (int t = 0; t <= ny; ++t) {
      const double v = f(s, t);
      const double w = wx[static_cast<std::size_t>(s)] * wy[static_cast<std::size_t>(t)];
      total += w * v * v;
      abs_max = std::max(abs_max, std::abs(v));
      if (v < 0.0) {
        negative += w * v * v;
        neg_max = std::max(neg_max, -v);
      }
    }
  }
  const double norm = std::sqrt(total);
  return {std::sqrt(negative) / norm, neg_max / norm, norm / abs_max, eig.values(0)};
}

struct OracleReport {
  double h = 0.0;
  int basis_m = 0;
  int basis_n = 0;
  double mu1_estimate = 0.0;  // symmetric-sector Rayleigh-Ritz value
  double mu3_estimate = 0.0;  // full-basis third Rayleigh-Ritz value
  double lambda1 = 0.0;
  double nu1 = 0.0;
  bool enclosure_ok = false;  // lambda1 <= mu1_estimate <= nu1 + 1e-6
};

inline OracleReport oracle_report(double h, int basis_m, int basis_n) {
  if (basis_m < 4 || basis_n < 4) {
    throw std::invalid_argument("oracle_report: basis sizes must be >= 4");
  }
  OracleReport r;
  r.h = h;
  r.basis_m = basis_m;
  r.basis_n = basis_n;
  r.mu1_estimate = biharmonic_mu(h, basis_m, basis_n, 1, Sector::even).front();
  r.mu3_estimate = biharmonic_mu(h, basis_m, basis_n, 3, Sector::full).back();
  r.lambda1 = lambda_n(h, 1);
  r.nu1 = nu1(h).nu1;
  r.enclosure_ok = r.lambda1 <= r.mu1_estimate && r.mu1_estimate <= r.nu1 + 1e-6;
  return r;
}

}  // namespace cplate
