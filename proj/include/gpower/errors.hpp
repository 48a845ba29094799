#pragma once

#include <stdexcept>
#include <string>

namespace gpower {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected input values (bad n, c, edge endpoints, ...).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition does not hold (iterated log out of domain).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The request exceeds a configured size cap (oracle size, enumeration count).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The asymptotic regime required by a solver does not apply at this input.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Intermediate values exceed floating-point range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// File read/write failure; message carries the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace gpower
