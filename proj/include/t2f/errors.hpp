#pragma once

#include <stdexcept>
#include <string>

namespace t2f {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of a total operation (e.g. evalAt outside [0,1]).
struct DomainError : Error {
    using Error::Error;
};

// Malformed textual input; the message carries a position where one is known.
struct ParseError : Error {
    using Error::Error;
};

// A representation invariant would be violated by the requested construction.
struct InvariantError : Error {
    using Error::Error;
};

// A documented operation precondition does not hold for the given arguments.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace t2f
