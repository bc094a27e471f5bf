#pragma once

#include <stdexcept>
#include <string>

namespace polyode {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input string does not parse as a rational / polynomial / flag value.
struct ParseError : Error {
    using Error::Error;
};

/// The equation parameters violate a20^2 + a10^2 != 0, or all of
/// a20, a21, a22 vanish (no second-order equation).
struct InvalidEquation : Error {
    using Error::Error;
};

/// A recurrence denominator (n*a20 + a10) or (2n*a20 + a10) vanished.
struct DegenerateDenominator : Error {
    int index;
    explicit DegenerateDenominator(int n)
        : Error("degenerate recurrence denominator at index n=" + std::to_string(n)),
          index(n) {}
};

/// The kernel of the series system has dimension > 1 (two eigenvalues
/// coincide); callers must pick a basis vector explicitly.
struct DegenerateSpectrum : Error {
    using Error::Error;
};

/// Something the theory guarantees failed (e.g. empty kernel at an
/// exact eigenvalue).
struct InternalError : Error {
    using Error::Error;
};

/// A denominator Pochhammer of a terminating series vanished before the
/// terminating index.
struct ZeroLowerParameter : Error {
    using Error::Error;
};

/// No printed formula covers this parameter configuration.
struct UnsupportedBranch : Error {
    using Error::Error;
};

/// A closed-form evaluation produced a residual imaginary part above
/// tolerance (branch-selection bug guard).
struct ImaginaryResidue : Error {
    using Error::Error;
};

/// A weight-spec inequality required by the requested operation fails.
struct ConstraintViolated : Error {
    using Error::Error;
};

/// The requested integral diverges for these parameters.
struct NonIntegrable : Error {
    using Error::Error;
};

/// Adaptive quadrature hit the refinement limit before the tolerance.
struct QuadratureNoConvergence : Error {
    using Error::Error;
};

/// A verification point coincides with a pole.
struct SingularPoint : Error {
    using Error::Error;
};

/// Catalog name not in the table.
struct UnknownName : Error {
    using Error::Error;
};

/// Catalog entry needs an argument that was not supplied.
struct MissingArg : Error {
    using Error::Error;
};

/// Solver output is not a rational multiple of the classical polynomial.
struct ProportionalityFailure : Error {
    int coefficient_index;
    ProportionalityFailure(const std::string& what, int idx)
        : Error(what), coefficient_index(idx) {}
};

} // namespace polyode
