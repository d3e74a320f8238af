#pragma once

#include <stdexcept>
#include <string>

namespace eo {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-facing configuration (CLI exit code 2).
struct UsageError : Error {
    using Error::Error;
};

// Internal consistency failures (CLI exit code 3). If one of these fires,
// a computation contract was violated, not a user input.
struct InternalError : Error {
    using Error::Error;
};

struct NonUnitLeading : InternalError {
    using InternalError::InternalError;
};
struct PositiveValuationRequired : InternalError {
    using InternalError::InternalError;
};
struct BadValuation : InternalError {
    using InternalError::InternalError;
};
struct OrderExceeded : InternalError {
    using InternalError::InternalError;
};
struct CancellationFailure : InternalError {
    using InternalError::InternalError;
};
struct NotExpressible : InternalError {
    using InternalError::InternalError;
};
struct ParityMismatch : InternalError {
    using InternalError::InternalError;
};
struct VerificationFailure : InternalError {
    using InternalError::InternalError;
};
struct OffsetMismatch : InternalError {
    using InternalError::InternalError;
};
struct BadParameter : InternalError {
    using InternalError::InternalError;
};
struct NoRelation : InternalError {
    using InternalError::InternalError;
};
struct AmbiguousRelation : InternalError {
    using InternalError::InternalError;
};
struct CapExceeded : UsageError {
    using UsageError::UsageError;
};

}  // namespace eo
