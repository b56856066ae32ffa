#pragma once

#include <stdexcept>
#include <string>

namespace csd {

// Base for all library errors so the CLI can map them to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// An internal invariant that the algorithms guarantee failed to hold.
struct InvariantError : Error {
    using Error::Error;
};

// A verification check ran to completion and the property does not hold.
struct VerificationError : Error {
    using Error::Error;
};

// A table file or cache could not be parsed or is inconsistent.
struct CacheCorruptError : Error {
    using Error::Error;
};

} // namespace csd
