#pragma once

#include <stdexcept>
#include <string>

namespace rsm {

/// Raised when a computation cannot produce a trustworthy number: an
/// eigensolve that did not converge, a domain scan with no interior
/// minimum, a quadrature that did not settle.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E0(L) was monotone over the scanned bracket. Usually the bracket is too
/// narrow, or the potential does not confine.
class NoInteriorMinimum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rsm
