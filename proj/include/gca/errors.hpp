#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gca {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched degree/form widths or matrix shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A constructor or solver was asked for something beyond its size cap.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Structure constants put a product into the wrong homogeneous component.
class GradingViolation : public Error {
public:
    GradingViolation(std::size_t i, std::size_t j, std::size_t k, const std::string& what)
        : Error(what), i(i), j(j), k(k) {}
    std::size_t i, j, k;
};

/// The declared unit does not act as a two-sided identity.
class UnitViolation : public Error {
public:
    UnitViolation(std::size_t element, const std::string& what) : Error(what), element(element) {}
    std::size_t element;
};

/// Malformed input: bad JSON schema, bad group spec, unknown labels.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// An internal consistency assertion failed; signals bad input data or a bug.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside of its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A hard constraint system has no solution.
class ConstraintConflict : public Error {
public:
    ConstraintConflict(std::string first, std::string second, const std::string& what)
        : Error(what), first(std::move(first)), second(std::move(second)) {}
    std::string first, second;
};

}  // namespace gca
