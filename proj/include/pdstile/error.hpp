#pragma once

#include <stdexcept>
#include <string>

namespace pdstile {

/// Malformed or out-of-contract input (bad file, unbalanced pair, foreign letter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed (non-primitive matrix, non-Pisot, mixed fields).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pdstile
