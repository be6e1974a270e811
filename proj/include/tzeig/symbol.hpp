#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tzeig/errors.hpp"

namespace tzeig {

using Index = Eigen::Index;

template <class Scalar>
inline constexpr Scalar pi_v = std::numbers::pi_v<Scalar>;

namespace detail {

// Exact integer power; keeps dyadic inputs dyadic.
template <class Scalar>
Scalar ipow(Scalar base, int exp) {
  Scalar r = Scalar(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Exact for n <= 62: every partial product in the multiplicative form is integral.
inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0ull;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

}  // namespace detail

enum class SymbolFamily { Kms, Rctp, OrderDependent };

/// Precision-free description of a symbol, as parsed from a spec string.
struct SymbolSpec {
  SymbolFamily family = SymbolFamily::Kms;
  double rho = 0.0;             // Kms: 0 < rho < 1
  int ell = 0;                  // Rctp: ell >= 1
  double a0 = 0.0, a1 = 0.0;    // OrderDependent
};

/// Parses `kms:rho=<r>`, `rctp:l=<int>` or `fdep:a0=<r>,a1=<r>`.
SymbolSpec parse_symbol(const std::string& text);

/// Inverse of parse_symbol; round-trips exactly.
std::string format_symbol(const SymbolSpec& spec);

/// An even real symbol on [-pi, pi], strictly increasing on [0, pi].
///
/// Three families are provided: the rational Kac-Murdock-Szego style symbol
/// with parameter rho, the real cosine trigonometric polynomial
/// (2 - 2 cos theta)^ell, and a matrix-order dependent combination
/// f_2 + a1 f_1 h^2 + a0 h^4 with h = 1/(order + 1).  An OrderDependent
/// symbol must be bound to a matrix order (via at_order) before any
/// numeric use.
template <class Scalar = double>
class Symbol {
 public:
  static Symbol kms(Scalar rho) {
    if (!(rho > Scalar(0) && rho < Scalar(1)))
      throw std::invalid_argument("kms: rho must lie in (0, 1)");
    Symbol s;
    s.family_ = SymbolFamily::Kms;
    s.rho_ = rho;
    return s;
  }

  static Symbol rctp(int ell) {
    if (ell < 1 || ell > 31) throw std::invalid_argument("rctp: l must lie in [1, 31]");
    Symbol s;
    s.family_ = SymbolFamily::Rctp;
    s.ell_ = ell;
    return s;
  }

  static Symbol order_dependent(Scalar a0, Scalar a1, Index order = 0) {
    Symbol s;
    s.family_ = SymbolFamily::OrderDependent;
    s.a0_ = a0;
    s.a1_ = a1;
    s.order_ = order;
    return s;
  }

  static Symbol from_spec(const SymbolSpec& spec, Index order = 0) {
    switch (spec.family) {
      case SymbolFamily::Kms:
        return kms(Scalar(spec.rho));
      case SymbolFamily::Rctp:
        return rctp(spec.ell);
      case SymbolFamily::OrderDependent:
      default:
        return order_dependent(Scalar(spec.a0), Scalar(spec.a1), order);
    }
  }

  SymbolFamily family() const { return family_; }
  Index order() const { return order_; }
  Scalar rho() const { return rho_; }
  int ell() const { return ell_; }

  /// Rebinds an OrderDependent symbol to matrix order n; identity otherwise.
  Symbol at_order(Index n) const {
    if (family_ != SymbolFamily::OrderDependent) return *this;
    Symbol s = *this;
    s.order_ = n;
    return s;
  }

  Scalar operator()(Scalar theta) const {
    switch (family_) {
      case SymbolFamily::Kms: {
        const Scalar c = (Scalar(1) + rho_) * (Scalar(1) + rho_) / Scalar(2);
        return c * (Scalar(1) - std::cos(theta)) /
               (Scalar(1) - Scalar(2) * rho_ * std::cos(theta) + rho_ * rho_);
      }
      case SymbolFamily::Rctp:
        return detail::ipow(Scalar(2) - Scalar(2) * std::cos(theta), ell_);
      case SymbolFamily::OrderDependent:
      default: {
        const Scalar hh = step() * step();
        const Scalar b = Scalar(2) - Scalar(2) * std::cos(theta);
        return b * b + a1_ * b * hh + a0_ * hh * hh;
      }
    }
  }

  Scalar derivative(Scalar theta) const {
    switch (family_) {
      case SymbolFamily::Kms: {
        const Scalar v = Scalar(1) - Scalar(2) * rho_ * std::cos(theta) + rho_ * rho_;
        const Scalar w = Scalar(1) - rho_ * rho_;
        return w * w * std::sin(theta) / (Scalar(2) * v * v);
      }
      case SymbolFamily::Rctp: {
        const Scalar b = Scalar(2) - Scalar(2) * std::cos(theta);
        return Scalar(ell_) * detail::ipow(b, ell_ - 1) * Scalar(2) * std::sin(theta);
      }
      case SymbolFamily::OrderDependent:
      default: {
        const Scalar hh = step() * step();
        const Scalar b = Scalar(2) - Scalar(2) * std::cos(theta);
        const Scalar sn = Scalar(2) * std::sin(theta);
        return Scalar(2) * b * sn + a1_ * sn * hh;
      }
    }
  }

  Scalar fourier_coefficient(Index k) const {
    switch (family_) {
      case SymbolFamily::Kms: {
        if (k == 0) return (Scalar(1) + rho_) / Scalar(2);
        const int a = static_cast<int>(k < 0 ? -k : k);
        return Scalar(0.25) * (rho_ * rho_ - Scalar(1)) * detail::ipow(rho_, a - 1);
      }
      case SymbolFamily::Rctp:
        return rctp_coefficient(ell_, k);
      case SymbolFamily::OrderDependent:
      default: {
        const Scalar hh = step() * step();
        Scalar v = rctp_coefficient(2, k) + a1_ * rctp_coefficient(1, k) * hh;
        if (k == 0) v += a0_ * hh * hh;
        return v;
      }
    }
  }

  Scalar range_min() const { return (*this)(Scalar(0)); }
  Scalar range_max() const { return (*this)(pi_v<Scalar>); }

  SymbolSpec spec() const {
    SymbolSpec s;
    s.family = family_;
    s.rho = static_cast<double>(rho_);
    s.ell = ell_;
    s.a0 = static_cast<double>(a0_);
    s.a1 = static_cast<double>(a1_);
    return s;
  }

 private:
  Symbol() = default;

  Scalar step() const {
    if (order_ < 1)
      throw std::logic_error("order-dependent symbol used without a bound matrix order");
    return Scalar(1) / Scalar(order_ + 1);
  }

  static Scalar rctp_coefficient(int ell, Index k) {
    const Index a = k < 0 ? -k : k;
    if (a > ell) return Scalar(0);
    const Scalar v = Scalar(detail::binomial(2 * ell, ell + static_cast<int>(a)));
    return (a % 2 != 0) ? -v : v;
  }

  SymbolFamily family_ = SymbolFamily::Kms;
  Scalar rho_ = Scalar(0);
  int ell_ = 0;
  Scalar a0_ = Scalar(0), a1_ = Scalar(0);
  Index order_ = 0;
};

/// Phase function of the KMS symbol: 2 atan(rho sin s / (1 - rho cos s)).
/// Vanishes at s = 0 and s = pi.
template <class Scalar>
Scalar eta_kms(Scalar rho, Scalar s) {
  return Scalar(2) * std::atan(rho * std::sin(s) / (Scalar(1) - rho * std::cos(s)));
}

/// Inverts the monotone branch f|_[0,pi].  y is clamped to [f(0), f(pi)];
/// the result satisfies |f(theta) - y| <= tol * max(1, |y|).  Bracketed
/// bisection with a Newton step whenever it stays inside the bracket.
template <class Scalar>
Scalar inverse_on_half_period(
    const Symbol<Scalar>& f, Scalar y,
    Scalar tol = Scalar(50) * std::numeric_limits<Scalar>::epsilon()) {
  const Scalar m = f.range_min();
  const Scalar M = f.range_max();
  if (!(m < M)) throw NonMonotoneSymbol("inverse_on_half_period: f(0) < f(pi) fails");
  if (y <= m) return Scalar(0);
  if (y >= M) return pi_v<Scalar>;

  Scalar lo = Scalar(0), hi = pi_v<Scalar>;
  Scalar x = (lo + hi) / Scalar(2);
  const Scalar target = tol * std::max(Scalar(1), std::abs(y));
  for (int it = 0; it < 200; ++it) {
    const Scalar fx = f(x) - y;
    if (std::abs(fx) <= target) return x;
    if (fx > Scalar(0))
      hi = x;
    else
      lo = x;
    const Scalar d = f.derivative(x);
    if (d > Scalar(0)) {
      const Scalar xn = x - fx / d;
      if (xn > lo && xn < hi) {
        x = xn;
        continue;
      }
    }
    x = (lo + hi) / Scalar(2);
    if (hi - lo <= Scalar(8) * std::numeric_limits<Scalar>::epsilon()) break;
  }
  return x;
}

}  // namespace tzeig
