#pragma once

#include <stdexcept>
#include <string>

namespace quadfermat {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (zero where nonzero is
// required, non-squarefree discriminant, composite exponent, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Operands that cannot be combined, e.g. elements of different fields.
class StructuralError : public Error {
public:
    using Error::Error;
};

class ArithmeticError : public Error {
public:
    using Error::Error;
};

// A documented precondition on the *meaning* of the input does not hold,
// e.g. a triple passed as a solution fails substitution.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Rejected equation descriptor or CLI parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace quadfermat
