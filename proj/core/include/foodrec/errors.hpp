#pragma once

#include <stdexcept>
#include <string>

namespace foodrec {

// Error taxonomy shared by all modules. Message text carries the offending
// values (shapes, ids, file positions); the type carries the kind.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tensor dimensions do not agree.
class ShapeError : public Error {
public:
    using Error::Error;
};

// NaN/Inf where a finite value is required.
class NumericError : public Error {
public:
    using Error::Error;
};

// Invalid or infeasible configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed serialized data.
class ParseError : public Error {
public:
    using Error::Error;
};

// Cross-record inconsistency (dangling ids, duplicate keys, broken invariants).
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Caller handed in unusable runtime input.
class InputError : public Error {
public:
    using Error::Error;
};

// Wrong use of an API (stale cache, missing precondition).
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace foodrec
