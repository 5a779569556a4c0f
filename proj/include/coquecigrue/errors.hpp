#pragma once

#include <stdexcept>
#include <string>

namespace coquecigrue {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation needs a Leibniz algebra and the table is not one.
struct NotLeibnizError : Error {
    using Error::Error;
};

// Raised when an operation needs a Lie algebra and the table is not one.
struct NotLieError : Error {
    using Error::Error;
};

// Input file could not be read as the line format at all.
struct ParseError : Error {
    using Error::Error;
};

// Input was syntactically fine but semantically broken (unknown label,
// duplicate label, malformed rational, inconsistent dimensions).
struct ValidationError : Error {
    using Error::Error;
};

// A truncation order was exceeded or two series with different orders met.
struct OrderMismatchError : Error {
    using Error::Error;
};

// Internal consistency failure: a guaranteed postcondition did not hold.
// Seeing one of these is a bug in this library, never a data problem.
struct InternalError : Error {
    using Error::Error;
};

// The quotient action in lm_from_leibniz depended on the representative.
// The squares span a two-sided ideal that kills the right slot, so this
// is unreachable for genuine Leibniz input; it guards the implementation.
struct IllDefinedActionError : InternalError {
    using InternalError::InternalError;
};

} // namespace coquecigrue
