#ifndef COPSHIELD_ERRORS_HPP
#define COPSHIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copshield {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied values: vertex ids out of range, domain violations.
struct InvalidArgument : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// State-space or size caps exceeded (solver, search, cover solver).
struct BudgetExceeded : Error {
    using Error::Error;
};

// A strategy returned a move that breaks the one-edge-per-step rule.
struct IllegalMove : Error {
    IllegalMove(const std::string& what, long long at_step)
        : Error(what + " (step " + std::to_string(at_step) + ")"), step(at_step) {}
    long long step;
};

// A strategy's stated precondition does not hold on the given instance.
struct PreconditionViolation : Error {
    using Error::Error;
};

// Internal consistency failure: a certificate's guarantee was observed broken.
struct ProtectionViolation : Error {
    using Error::Error;
};

struct RetryExhausted : Error {
    using Error::Error;
};

}  // namespace copshield

#endif
