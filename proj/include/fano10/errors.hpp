#pragma once

#include <stdexcept>
#include <string>

namespace fano10 {

// Base class so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input (bad dimensions, bad parameters, unparsable matrices).
struct InvalidParameter : Error {
    using Error::Error;
};
struct NonSquare : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};
struct NonSymmetric : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};
struct ParseError : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

// Domain errors: the input is well-formed but outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};
struct Degenerate : DomainError {
    using DomainError::DomainError;
};
struct ZeroVector : DomainError {
    using DomainError::DomainError;
};
struct OwnerMismatch : DomainError {
    using DomainError::DomainError;
};
struct NotIsotropic : DomainError {
    using DomainError::DomainError;
};
struct NotIsometry : DomainError {
    using DomainError::DomainError;
};
struct NotFiniteIndex : DomainError {
    using DomainError::DomainError;
};
struct NotCyclic : DomainError {
    using DomainError::DomainError;
};
struct TooLarge : DomainError {
    using DomainError::DomainError;
};
struct NotAdmissible : DomainError {
    using DomainError::DomainError;
};
struct UnsupportedShape : DomainError {
    using DomainError::DomainError;
};
struct HNotNorm10 : DomainError {
    using DomainError::DomainError;
};

// Bug sentinels: these indicate an internal inconsistency, not a user error.
struct MethodDisagreement : Error {
    using Error::Error;
};
struct InternalVerificationFailed : Error {
    using Error::Error;
};

}  // namespace fano10
