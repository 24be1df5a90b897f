#pragma once

#include <stdexcept>
#include <string>

namespace daha {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by an exactly-zero field element.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// A denominator vanishes at an evaluation or specialization point.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Invalid domain data: unknown root system, weight outside the required
// lattice/chamber, non-invariant input, dimension mismatch.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Eigenvalues failed to separate after exhausting all fundamental orbit sums.
struct EigenvalueCollision : Error {
    explicit EigenvalueCollision(const std::string& msg) : Error(msg) {}
};

// An identity the engine relies on failed to verify.
struct IdentityFailure : Error {
    explicit IdentityFailure(const std::string& msg) : Error(msg) {}
};

// Malformed textual input to a parser.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace daha
