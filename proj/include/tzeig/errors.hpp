#pragma once

#include <stdexcept>
#include <string>

namespace tzeig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The bracketing sanity check f(0) < f(pi) failed.
struct NonMonotoneSymbol : Error {
  using Error::Error;
};

/// The dense eigensolver exceeded its iteration budget.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// The extrapolation system degenerated; signals a grid construction bug.
struct SingularSystem : Error {
  using Error::Error;
};

/// A reference spectrum was requested beyond the dense-solve ceiling.
struct InfeasibleReference : Error {
  using Error::Error;
};

/// The requested baseline is not defined for this symbol family.
struct UnsupportedSymbol : Error {
  using Error::Error;
};

}  // namespace tzeig
