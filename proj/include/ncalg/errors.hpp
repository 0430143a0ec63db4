#ifndef NCALG_ERRORS_HPP
#define NCALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

// Domain errors: the input was well formed but the mathematics refuses it.
// The CLI maps these to exit code 1 and reports what() verbatim.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlgebraMismatch : public DomainError {
public:
    AlgebraMismatch() : DomainError("operands belong to different algebras") {}
};

class ShapeError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnitAxiomError : public DomainError {
public:
    using DomainError::DomainError;
};

class AssociativityError : public DomainError {
public:
    using DomainError::DomainError;
};

class MissingUnit : public DomainError {
public:
    using DomainError::DomainError;
};

class NotConjugationAlgebra : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedAlgebra : public DomainError {
public:
    using DomainError::DomainError;
};

class NotReducible : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisorNotInvertible : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisorInverseNotRepresentable : public DomainError {
public:
    using DomainError::DomainError;
};

class DegreeCapExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed text input. Carries a 1-based line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ncalg

#endif
