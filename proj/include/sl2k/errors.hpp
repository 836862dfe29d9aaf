#pragma once

#include <stdexcept>
#include <string>

namespace sl2k {

// Base class for all library errors so callers can catch at one place.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDivision : Error {
    explicit ZeroDivision(const std::string& what = "division by zero") : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what = "modulus is not prime") : Error(what) {}
};

// Raised whenever a verdict would depend on coefficients beyond the known
// precision window.  The policy is to raise instead of guessing.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "precision exhausted") : Error(what) {}
};

struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& what = "operands live in different domains") : Error(what) {}
};

struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& what = "polynomial is not certified irreducible") : Error(what) {}
};

struct DeterminantNotOne : Error {
    explicit DeterminantNotOne(const std::string& what = "matrix determinant is not 1") : Error(what) {}
};

struct IdentityInput : Error {
    explicit IdentityInput(const std::string& what = "central input where a nontrivial element is required") : Error(what) {}
};

struct NotElliptic : Error {
    explicit NotElliptic(const std::string& what = "element has positive translation length") : Error(what) {}
};

struct NotQuasiUnipotent : Error {
    explicit NotQuasiUnipotent(const std::string& what = "element is not quasi-unipotent") : Error(what) {}
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& what = "word uses an undeclared generator") : Error(what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what = "degenerate input") : Error(what) {}
};

struct NumericallySingular : Error {
    explicit NumericallySingular(const std::string& what = "eigenvalue sign not certifiable") : Error(what) {}
};

struct SearchBudgetExceeded : Error {
    explicit SearchBudgetExceeded(const std::string& what = "search budget exceeded") : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what = "parse error") : Error(what) {}
};

}  // namespace sl2k
