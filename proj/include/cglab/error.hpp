#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cglab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed element / function / file text. Carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Operands belong to different fields (or Laurent fields with different q).
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside a function's domain, or an operation asked of the wrong field.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A discrete convexity precondition failed on the supplied grid.
class ConvexityError : public Error {
public:
    using Error::Error;
};

/// An intermediate set exceeded the configured element cap. Not a math failure.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Squeeze-grid hypothesis (k*d <= gaps) violated, or a construction fed an invalid grid/chain.
class GridError : public Error {
public:
    using Error::Error;
};

/// A consequence of a theorem failed. Always a bug, never data.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace cglab
