#pragma once

#include <stdexcept>
#include <string>

namespace sejoin {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gysin engine refused a base profile that is not hard-Lefschetz admissible.
struct LefschetzViolated : Error {
    using Error::Error;
};

// A Betti vector cannot be the total space of a circle bundle over any
// admissible base (negative intermediate rank, duality breach, or the
// round trip through the Gysin engine fails).
struct Inconsistent : Error {
    using Error::Error;
};

struct BothFactorsHaveTorsion : Error {
    using Error::Error;
};

struct OutsideDelPezzoRange : Error {
    using Error::Error;
};

struct NotFano : Error {
    using Error::Error;
};

struct NotPairwiseCoprime : Error {
    using Error::Error;
};

struct NotSimplyConnected : Error {
    using Error::Error;
};

// A catalog record or expression could not be read.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), pos(0) {}
    std::size_t pos;
};

// A catalog record violates a named invariant.
struct InvariantViolation : Error {
    using Error::Error;
};

// An integral table entry disagrees with the rational engine.  This is a
// bug in the table, never a data-dependent condition.
struct ModelRationalMismatch : Error {
    using Error::Error;
};

struct BothZero : Error {
    using Error::Error;
};

struct MismatchedFactors : Error {
    using Error::Error;
};

struct IndeterminateOrder : Error {
    using Error::Error;
};

struct WrongShape : Error {
    using Error::Error;
};

}  // namespace sejoin
