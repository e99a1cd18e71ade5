#pragma once

#include <stdexcept>
#include <string>

namespace symcap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input: JSON, rational literals, CLI domain specs.
struct ParseError : Error {
    using Error::Error;
};

// A domain object violates its structural invariants (bad chain, empty
// polytope, zero-length edge, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An operation was asked to run on a domain outside the class it is exact
// for (e.g. weight expansion of a non-concave polygon).
struct ClassMismatchError : Error {
    using Error::Error;
};

// A parameter is outside its admissible range (e.g. the X_a family needs
// 0 < a < 1/2).
struct RangeError : Error {
    using Error::Error;
};

// A theorem's side condition failed. Carries which side failed so callers
// can report it.
struct HypothesisError : Error {
    std::string failed_side;
    HypothesisError(const std::string& what, std::string side)
        : Error(what), failed_side(std::move(side)) {}
};

}  // namespace symcap
