#ifndef PAULIGEO_ERROR_HPP
#define PAULIGEO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pauligeo {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Probability vector does not sum to one.
struct NonUnitSum : Error {
    using Error::Error;
};

// Input matrix is not a valid density matrix.
struct InvalidState : Error {
    using Error::Error;
};

// Divisibility queried for a map that is not a channel (not CPTP).
struct NotAChannel : Error {
    using Error::Error;
};

// Parameter vector length does not match the family dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Region has no exact constraint-set realization for this family.
struct UnsupportedRegion : Error {
    using Error::Error;
};

// Ratio denominator region has zero volume.
struct ZeroDenominator : Error {
    using Error::Error;
};

// Semigroup rate is negative.
struct NegativeRate : Error {
    using Error::Error;
};

// Negative evolution time.
struct NegativeTime : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

// Channel has a non-positive eigenvalue; no time-local generator reaches it.
struct NotTlgObtainable : Error {
    using Error::Error;
};

}  // namespace pauligeo

#endif
