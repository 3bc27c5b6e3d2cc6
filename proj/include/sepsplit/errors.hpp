#pragma once

#include <stdexcept>
#include <string>

namespace sepsplit {

// Base for all recoverable errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live over different ground sets (mismatched k) or a matrix
// dimension disagrees with what an operation requires.
struct DimensionError : Error {
    using Error::Error;
};

// An argument is outside the operation's mathematical domain (k < 1,
// b > min(s,t), parity precondition violated, ...).
struct DomainError : Error {
    using Error::Error;
};

// A brute-force operation would exceed its configured cost guard. Callers
// may retry with Guards::unlimited() if they accept the cost.
struct GuardExceeded : Error {
    using Error::Error;
};

// A semantic precondition failed (e.g. a non-separating family where a
// separating one is required).
struct PreconditionError : Error {
    using Error::Error;
};

// An operation that requires at least one family member got an empty family.
struct EmptyFamilyError : Error {
    using Error::Error;
};

// Malformed serialized input. line is 1-based; 0 when no line applies.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                            : msg),
          line(line_no) {}
};

// A randomized builder hit its attempt ceiling without certifying success.
// Reseeding and retrying is expected to succeed with high probability.
struct RetryExhausted : Error {
    using Error::Error;
};

// Tripwire: a construction whose output is verified before returning
// produced an invalid result. Indicates a bug in the construction itself,
// never a caller error.
struct ConstructionBug : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace sepsplit
