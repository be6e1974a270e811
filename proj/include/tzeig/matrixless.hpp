#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "tzeig/errors.hpp"
#include "tzeig/symbol.hpp"
#include "tzeig/toeplitz.hpp"

namespace tzeig {

/// Grid node theta_{j,n} = j pi / (n + 1).  Computed as (j * pi) / (n + 1)
/// so that nodes of nested doubled grids coincide bitwise.
template <class Scalar>
Scalar theta_node(Index j, Index n) {
  return (Scalar(j) * pi_v<Scalar>) / Scalar(n + 1);
}

/// The family of nested sizes n_k = 2^(k-1) (n1 + 1) - 1, k = 1..levels.
/// Index map j_k = 2^(k-1) j1 keeps theta_{j1,n1} = theta_{jk,nk} exactly.
struct ExtrapolationGrid {
  Index base_size = 0;  // n1
  int levels = 0;       // alpha

  Index size(int k) const { return (Index(1) << (k - 1)) * (base_size + 1) - 1; }
  Index index(Index j1, int k) const { return (Index(1) << (k - 1)) * j1; }
  Index node_count() const { return base_size + 2; }  // nodes 0 .. n1+1
};

inline ExtrapolationGrid build_grid(Index n1, int alpha) {
  if (n1 < 4) throw std::invalid_argument("build_grid: base size must be at least 4");
  if (alpha < 2) throw std::invalid_argument("build_grid: at least two grids are required");
  if (alpha > 8) throw std::invalid_argument("build_grid: at most eight grids are supported");
  return ExtrapolationGrid{n1, alpha};
}

/// Expansion coefficients r_k(theta) estimated at the nodes of the base grid.
/// Rows run over nodes 0..n1+1; row j holds r_1..r_alpha at theta_{j,n1}.
/// The two endpoint rows carry no extrapolation data and are zero.
template <class Scalar = double>
struct CoefficientTable {
  ExtrapolationGrid grid;
  SymbolSpec symbol;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> values;  // (n1+2) x alpha

  Scalar value(Index node, int k) const { return values(node, k - 1); }

  template <class Other>
  CoefficientTable<Other> cast() const {
    CoefficientTable<Other> out;
    out.grid = grid;
    out.symbol = symbol;
    out.values = values.template cast<Other>();
    return out;
  }
};

/// Per-index approximations at one target order and level.
template <class Scalar = double>
struct ApproximationResult {
  Index order = 0;
  int level = 0;
  Eigen::Vector<Scalar, Eigen::Dynamic> s_hat;       // shifted abscissas, entry j-1
  Eigen::Vector<Scalar, Eigen::Dynamic> lambda_hat;  // f(s_hat)
};

/// Preimages s_{j,n} = f|_[0,pi]^-1(lambda_j) of a sorted spectrum.
template <class Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> compute_s_values(
    const Symbol<Scalar>& sym, Index n, const SpectrumVector<Scalar>& spectrum) {
  const Symbol<Scalar> f = sym.at_order(n);
  Eigen::Vector<Scalar, Eigen::Dynamic> s(spectrum.size());
  for (Index i = 0; i < spectrum.size(); ++i) s[i] = inverse_on_half_period(f, spectrum[i]);
  return s;
}

/// Solves the shifted-power system sum_l x_l h_k^l = rhs_k for every column
/// of `rhs` (alpha x m).  The solve runs on the h_k/h_1 ratios, which are
/// exact powers of two, and unscales afterwards.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> solve_extrapolation_system(
    const ExtrapolationGrid& grid,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& rhs) {
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int alpha = grid.levels;
  Dense c(alpha, alpha);
  for (int k = 1; k <= alpha; ++k) {
    const Scalar ratio = Scalar(grid.base_size + 1) / Scalar(grid.size(k) + 1);
    for (int l = 1; l <= alpha; ++l) c(k - 1, l - 1) = detail::ipow(ratio, l);
  }
  Eigen::FullPivLU<Dense> lu(c);
  if (!lu.isInvertible())
    throw SingularSystem("solve_extrapolation_system: degenerate step ratios");
  Dense scaled = lu.solve(rhs);
  for (int l = 1; l <= alpha; ++l)
    scaled.row(l - 1) *= detail::ipow(Scalar(grid.base_size + 1), l);
  return scaled;
}

/// Estimates r_1..r_alpha at every interior node of the base grid from the
/// alpha precomputed spectra, one shifted-power solve per node.
template <class Scalar>
CoefficientTable<Scalar> extrapolate_coefficients(
    const Symbol<Scalar>& sym, const ExtrapolationGrid& grid,
    const std::vector<SpectrumVector<Scalar>>& spectra) {
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (static_cast<int>(spectra.size()) != grid.levels)
    throw std::invalid_argument("extrapolate_coefficients: one spectrum per grid level expected");
  for (int k = 1; k <= grid.levels; ++k)
    if (spectra[k - 1].size() != grid.size(k))
      throw std::invalid_argument("extrapolate_coefficients: spectrum size mismatch");

  const Index n1 = grid.base_size;
  std::vector<Eigen::Vector<Scalar, Eigen::Dynamic>> s(grid.levels);
  for (int k = 1; k <= grid.levels; ++k)
    s[k - 1] = compute_s_values(sym, grid.size(k), spectra[k - 1]);

  Dense rhs(grid.levels, n1);
  for (Index j1 = 1; j1 <= n1; ++j1) {
    const Scalar sigma = theta_node<Scalar>(j1, n1);
    for (int k = 1; k <= grid.levels; ++k)
      rhs(k - 1, j1 - 1) = s[k - 1][grid.index(j1, k) - 1] - sigma;
  }
  const Dense coeff = solve_extrapolation_system(grid, rhs);

  CoefficientTable<Scalar> table;
  table.grid = grid;
  table.symbol = sym.spec();
  table.values.setZero(grid.node_count(), grid.levels);
  for (Index j1 = 1; j1 <= n1; ++j1) table.values.row(j1) = coeff.col(j1 - 1).transpose();
  if (!table.values.allFinite())
    throw Error("extrapolate_coefficients: non-finite coefficient");
  return table;
}

/// Evaluates the k-th coefficient at theta by local Lagrange interpolation
/// through the alpha-k+5 nodes closest to theta.  A theta that coincides
/// with a table node returns the stored value bit-exactly; when theta is
/// the midpoint of two nodes the left stencil is taken.
///
/// The zero endpoint rows are exact for the kms family (its coefficient
/// functions vanish at 0 and pi) and act as stencil anchors there.  For the
/// other families the endpoint values are not known, so stencils draw from
/// the interior nodes only.
template <class Scalar>
Scalar interpolate_coefficient(const CoefficientTable<Scalar>& table, int k, Scalar theta) {
  const Index n1 = table.grid.base_size;
  if (k < 1 || k > table.grid.levels)
    throw std::invalid_argument("interpolate_coefficient: term index out of range");

  const Scalar t = theta * Scalar(n1 + 1) / pi_v<Scalar>;  // node units
  const Index nearest = std::min<Index>(std::max<Index>(Index(std::llround((double)t)), 0), n1 + 1);
  if (theta == theta_node<Scalar>(nearest, n1)) return table.values(nearest, k - 1);

  const bool endpoints = table.symbol.family == SymbolFamily::Kms;
  const Index lo = endpoints ? 0 : 1;
  const Index hi = endpoints ? n1 + 1 : n1;
  const Index p = std::min<Index>(table.grid.levels - k + 5, hi - lo + 1);
  Index a = static_cast<Index>(std::floor((double)t));
  Index b = a + 1;
  if (a < lo) {
    a = lo;
    b = lo + 1;
  }
  if (b > hi) {
    b = hi;
    a = hi - 1;
  }
  while (b - a + 1 < p) {
    const bool can_left = a - 1 >= lo;
    const bool can_right = b + 1 <= hi;
    if (can_left && (!can_right || t - Scalar(a - 1) <= Scalar(b + 1) - t))
      --a;
    else
      ++b;
  }

  Scalar acc = Scalar(0);
  for (Index i = a; i <= b; ++i) {
    Scalar li = Scalar(1);
    const Scalar xi = theta_node<Scalar>(i, n1);
    for (Index m = a; m <= b; ++m) {
      if (m == i) continue;
      li *= (theta - theta_node<Scalar>(m, n1)) / (xi - theta_node<Scalar>(m, n1));
    }
    acc += li * table.values(i, k - 1);
  }
  return acc;
}

/// All n eigenvalue approximations at the given level:
/// s_hat = theta + sum_{l<level} r_l(theta) h^l, lambda_hat = f(clamp(s_hat)).
/// Level 1 is the plain symbol sampling f(theta_{j,n}).
template <class Scalar>
ApproximationResult<Scalar> approximate_all(const Symbol<Scalar>& sym, Index n,
                                            const CoefficientTable<Scalar>& table, int level) {
  if (level < 1 || level > table.grid.levels)
    throw std::invalid_argument("approximate_all: level out of range");
  const Symbol<Scalar> f = sym.at_order(n);
  const Scalar h = Scalar(1) / Scalar(n + 1);

  ApproximationResult<Scalar> out;
  out.order = n;
  out.level = level;
  out.s_hat.resize(n);
  out.lambda_hat.resize(n);
  for (Index j = 1; j <= n; ++j) {
    const Scalar theta = theta_node<Scalar>(j, n);
    Scalar s = theta;
    Scalar hp = Scalar(1);
    for (int l = 1; l <= level - 1; ++l) {
      hp *= h;
      s += interpolate_coefficient(table, l, theta) * hp;
    }
    s = std::min(std::max(s, Scalar(0)), pi_v<Scalar>);
    out.s_hat[j - 1] = s;
    out.lambda_hat[j - 1] = f(s);
  }
  return out;
}

/// Plain-text serialization: header `n1 alpha symbol-spec`, then one row per
/// node `j theta r1 ... r_alpha`, 17 significant digits.
void save_table(const CoefficientTable<double>& table, std::ostream& out);
void save_table(const CoefficientTable<double>& table, const std::string& path);
CoefficientTable<double> load_table(std::istream& in);
CoefficientTable<double> load_table(const std::string& path);

}  // namespace tzeig
