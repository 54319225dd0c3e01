#pragma once

#include <stdexcept>
#include <string>

namespace schatten {

// Root of the library's error hierarchy. Precondition violations raise a
// subclass of Error; plain std::invalid_argument is reserved for malformed
// scalar arguments (negative counts, p < 1, bad enum tags).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand dimensions are incompatible with the requested operation.
struct ShapeMismatch : Error {
    using Error::Error;
};

// A matrix required to be hermitian fails the symmetry test.
struct NotHermitian : Error {
    using Error::Error;
};

// A matrix required to be normal fails the commutator test (or its Schur
// form is too far from diagonal to diagonalize reliably).
struct NotNormal : Error {
    using Error::Error;
};

// A matrix required to be unitary fails the isometry test.
struct NotUnitary : Error {
    using Error::Error;
};

// An underlying dense decomposition did not converge.
struct DecompositionFailure : Error {
    using Error::Error;
};

// An iterative optimizer violated its monotonicity guarantee.
struct NonConvergence : Error {
    using Error::Error;
};

// A requested sequence length cannot hold the mandatory entries.
struct LengthTooSmall : Error {
    using Error::Error;
};

// Exhaustive enumeration was requested above the hard size cap.
struct TooLargeForExhaustive : Error {
    using Error::Error;
};

// A compact set was given an empty generator (no points / no vertices).
struct EmptySet : Error {
    using Error::Error;
};

// A batch operation received no elements.
struct EmptyInput : Error {
    using Error::Error;
};

// A set-sequence operation received too few sets.
struct EmptySequence : Error {
    using Error::Error;
};

// A disc was requested with radius < 0.
struct NegativeRadius : Error {
    using Error::Error;
};

// A real-extremes computation met a set with non-real members.
struct NotRealSet : Error {
    using Error::Error;
};

// File or stream I/O failed, or the payload does not parse as the
// documented format.
struct IoError : Error {
    using Error::Error;
};

}  // namespace schatten
