#pragma once

#include <Eigen/Dense>

#include "tzeig/errors.hpp"
#include "tzeig/symbol.hpp"

namespace tzeig {

template <class Scalar = double>
using SpectrumVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

/// Symmetric Toeplitz matrix held as its first column.
template <class Scalar = double>
struct ToeplitzMatrix {
  Index order = 0;
  Eigen::Vector<Scalar, Eigen::Dynamic> coeffs;  // c_0 .. c_{order-1}
  Index bandwidth = 0;                           // largest k with |c_k| >= cutoff

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(order, order);
    for (Index i = 0; i < order; ++i)
      for (Index j = 0; j <= i; ++j) {
        a(i, j) = coeffs[i - j];
        a(j, i) = coeffs[i - j];
      }
    return a;
  }
};

// Storage heuristic only; coefficients themselves are never truncated.
inline constexpr double kBandwidthCutoff = 1e-30;

template <class Scalar>
ToeplitzMatrix<Scalar> build_matrix(const Symbol<Scalar>& sym, Index n) {
  if (n < 1) throw std::invalid_argument("build_matrix: order must be positive");
  const Symbol<Scalar> f = sym.at_order(n);
  ToeplitzMatrix<Scalar> t;
  t.order = n;
  t.coeffs.resize(n);
  for (Index k = 0; k < n; ++k) t.coeffs[k] = f.fourier_coefficient(k);
  t.bandwidth = 0;
  for (Index k = n - 1; k >= 1; --k)
    if (std::abs(t.coeffs[k]) >= Scalar(kBandwidthCutoff)) {
      t.bandwidth = k;
      break;
    }
  return t;
}

/// All eigenvalues in non-decreasing order (dense selfadjoint solve).
template <class Scalar>
SpectrumVector<Scalar> eigenvalues_sorted(const ToeplitzMatrix<Scalar>& mat) {
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<Dense> solver(mat.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalues_sorted: selfadjoint solver did not converge");
  return solver.eigenvalues();
}

}  // namespace tzeig
