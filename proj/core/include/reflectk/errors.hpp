#pragma once

#include <stdexcept>
#include <string>

namespace reflectk {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion of the zero scalar.
class DivideByZeroError : public Error {
public:
    using Error::Error;
};

/// A substitution made a denominator vanish identically.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Matrix inversion of a singular matrix; carries the vanishing determinant.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, std::string det)
        : Error(what), determinant_(std::move(det)) {}
    const std::string& determinant() const { return determinant_; }

private:
    std::string determinant_;
};

/// A polynomial grew past the configured term-count ceiling.
class TermLimitError : public Error {
public:
    using Error::Error;
};

/// Text failed to parse; position is a 1-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

/// A class label or index tuple violates its defining inequalities.
class InvalidClassError : public Error {
public:
    using Error::Error;
};

/// An input value broke a documented invariant (non-involution, Q^2 != Q, ...).
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace reflectk
