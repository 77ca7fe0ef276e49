#pragma once

#include <stdexcept>
#include <string>

namespace tcsp {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (bad arity, malformed formula, ...).
struct ContractError : Error {
    using Error::Error;
};

// A configured cap would be exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

// Name lookup failed (builtin relation, structure, instance, symbol).
struct LookupError : Error {
    using Error::Error;
};

// An instance was handed to a solver for a fragment it does not belong to.
struct WrongFragment : Error {
    using Error::Error;
};

} // namespace tcsp
