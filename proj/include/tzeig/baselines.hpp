#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "tzeig/errors.hpp"
#include "tzeig/matrixless.hpp"
#include "tzeig/symbol.hpp"
#include "tzeig/toeplitz.hpp"

namespace tzeig {

// Derivatives of eta_kms, differentiated from the arctan closed form.
// With Q(s) = 1 - 2 rho cos s + rho^2:
//   eta'   =  2 rho (cos s - rho) / Q
//   eta''  = -2 rho (1 - rho^2) sin s / Q^2
//   eta''' = -2 rho (1 - rho^2) ((1 + rho^2) cos s + 2 rho cos^2 s - 4 rho) / Q^3

template <class Scalar>
Scalar eta_kms_d1(Scalar rho, Scalar s) {
  const Scalar q = Scalar(1) - Scalar(2) * rho * std::cos(s) + rho * rho;
  return Scalar(2) * rho * (std::cos(s) - rho) / q;
}

template <class Scalar>
Scalar eta_kms_d2(Scalar rho, Scalar s) {
  const Scalar q = Scalar(1) - Scalar(2) * rho * std::cos(s) + rho * rho;
  return -Scalar(2) * rho * (Scalar(1) - rho * rho) * std::sin(s) / (q * q);
}

template <class Scalar>
Scalar eta_kms_d3(Scalar rho, Scalar s) {
  const Scalar c = std::cos(s);
  const Scalar q = Scalar(1) - Scalar(2) * rho * c + rho * rho;
  return -Scalar(2) * rho * (Scalar(1) - rho * rho) *
         ((Scalar(1) + rho * rho) * c + Scalar(2) * rho * c * c - Scalar(4) * rho) / (q * q * q);
}

/// Analytic expansion coefficients r_1..r_4 for the KMS symbol, assembled
/// from eta and its derivatives.  All four vanish at s = 0 and s = pi.
template <class Scalar = double>
struct SlCoefficients {
  Scalar rho;

  Scalar r(int k, Scalar s) const {
    const Scalar e = eta_kms(rho, s);
    const Scalar e1 = eta_kms_d1(rho, s);
    const Scalar e2 = eta_kms_d2(rho, s);
    const Scalar e3 = eta_kms_d3(rho, s);
    switch (k) {
      case 1:
        return -e;
      case 2:
        return e * e1;
      case 3:
        return -e * e1 * e1 - e * e * e2 / Scalar(2);
      case 4:
        return e * e1 * e1 * e1 + Scalar(3) / Scalar(2) * e * e * e1 * e2 +
               e * e * e * e3 / Scalar(6);
      default:
        throw std::invalid_argument("SlCoefficients: k must lie in [1, 4]");
    }
  }
};

/// Exact simple-loop approximation of lambda_j(T_n(f)) for the KMS symbol,
/// using the analytic r_k in place of extrapolated estimates.
template <class Scalar>
Scalar sl_approximation(Scalar rho, Index n, Index j, int level) {
  if (level < 1 || level > 5)
    throw std::invalid_argument("sl_approximation: level must lie in [1, 5]");
  const SlCoefficients<Scalar> sl{rho};
  const Scalar theta = theta_node<Scalar>(j, n);
  const Scalar h = Scalar(1) / Scalar(n + 1);
  Scalar s = theta;
  Scalar hp = Scalar(1);
  for (int k = 1; k <= level - 1; ++k) {
    hp *= h;
    s += sl.r(k, theta) * hp;
  }
  return Symbol<Scalar>::kms(rho)(s);
}

template <class Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> sl_approximate_all(const Symbol<Scalar>& sym, Index n,
                                                         int level) {
  if (sym.family() != SymbolFamily::Kms)
    throw UnsupportedSymbol("sl_approximate_all: analytic coefficients exist only for kms");
  Eigen::Vector<Scalar, Eigen::Dynamic> out(n);
  for (Index j = 1; j <= n; ++j) out[j - 1] = sl_approximation(sym.rho(), n, j, level);
  return out;
}

/// Lambda-variable analogue of extrapolate_coefficients: fits
/// lambda_{j_k} - f(sigma) = sum_l c_l(sigma) h_k^l on the same grids.
template <class Scalar>
CoefficientTable<Scalar> extrapolate_lambda_coefficients(
    const Symbol<Scalar>& sym, const ExtrapolationGrid& grid,
    const std::vector<SpectrumVector<Scalar>>& spectra) {
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (static_cast<int>(spectra.size()) != grid.levels)
    throw std::invalid_argument(
        "extrapolate_lambda_coefficients: one spectrum per grid level expected");
  const Index n1 = grid.base_size;
  Dense rhs(grid.levels, n1);
  for (Index j1 = 1; j1 <= n1; ++j1) {
    const Scalar sigma = theta_node<Scalar>(j1, n1);
    for (int k = 1; k <= grid.levels; ++k) {
      const Symbol<Scalar> f = sym.at_order(grid.size(k));
      rhs(k - 1, j1 - 1) = spectra[k - 1][grid.index(j1, k) - 1] - f(sigma);
    }
  }
  const Dense coeff = solve_extrapolation_system(grid, rhs);

  CoefficientTable<Scalar> table;
  table.grid = grid;
  table.symbol = sym.spec();
  table.values.setZero(grid.node_count(), grid.levels);
  for (Index j1 = 1; j1 <= n1; ++j1) table.values.row(j1) = coeff.col(j1 - 1).transpose();
  if (!table.values.allFinite())
    throw Error("extrapolate_lambda_coefficients: non-finite coefficient");
  return table;
}

/// Additive lambda-variable evaluation:
/// lambda_hat = f(theta) + sum_{l<level} c_l(theta) h^l, no inner inverse.
template <class Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> na_approximation(const Symbol<Scalar>& sym, Index n,
                                                       const CoefficientTable<Scalar>& table,
                                                       int level) {
  if (level < 1 || level > table.grid.levels)
    throw std::invalid_argument("na_approximation: level out of range");
  const Symbol<Scalar> f = sym.at_order(n);
  const Scalar h = Scalar(1) / Scalar(n + 1);
  Eigen::Vector<Scalar, Eigen::Dynamic> out(n);
  for (Index j = 1; j <= n; ++j) {
    const Scalar theta = theta_node<Scalar>(j, n);
    Scalar v = f(theta);
    Scalar hp = Scalar(1);
    for (int l = 1; l <= level - 1; ++l) {
      hp *= h;
      v += interpolate_coefficient(table, l, theta) * hp;
    }
    out[j - 1] = v;
  }
  return out;
}

}  // namespace tzeig
