#pragma once

#include <stdexcept>
#include <string>

namespace sigma_roots {

/// Malformed user input (quiver files, vector literals, rationals).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain: length mismatch, zero vector,
/// entry above the cap, reflection at a loopy vertex, ...
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer arithmetic left the checked range.
class OverflowError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A search refused to continue past its node budget. Not a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sigma_roots
