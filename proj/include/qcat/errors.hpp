#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by an exact zero (scalar inverse, projector completeness divisions, ...).
struct DivisionByZero : Error {
    using Error::Error;
};

// Mixing scalars from different coefficient modes (generic vs root-of-unity, or
// different cyclotomic orders).
struct ModeMismatch : Error {
    using Error::Error;
};

// Input outside a documented precondition (non-dominant weight where dominance is
// required, index out of range, mismatched sizes, ...).
struct DomainError : Error {
    using Error::Error;
};

// A guard against accidentally enormous enumerations; raising the guard is a
// deliberate caller decision, never an implicit one.
struct ResourceLimit : Error {
    using Error::Error;
};

// A spectral decomposition was requested with a candidate eigenvalue list that
// does not exhaust the space.
struct IncompleteSpectrum : Error {
    using Error::Error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// A "cannot happen" internal invariant failed.  Seeing one is a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace qcat
