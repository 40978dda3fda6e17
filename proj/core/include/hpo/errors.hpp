#pragma once

#include <stdexcept>

namespace hpo {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (a, b) does not induce a bounded composition operator (needs a > 0, Re(b) >= 0).
struct UnboundedSymbol : Error { using Error::Error; };

/// The inverse symbol leaves the bounded class (Re(b) > 0).
struct NotAutomorphism : Error { using Error::Error; };

/// A point left the open right half-plane.
struct OutsideDomain : Error { using Error::Error; };

/// The transferred symbol hit the Cayley pole (cannot occur for valid symbols).
struct DegenerateSymbol : Error { using Error::Error; };

/// An iterative routine exhausted its budget.
struct NoConvergence : Error { using Error::Error; };

/// A quadrature sample exceeded the overflow guard.
struct QuadratureDivergence : Error { using Error::Error; };

/// run_suite() does not know the requested suite.
struct UnknownSuite : Error { using Error::Error; };

} // namespace hpo
