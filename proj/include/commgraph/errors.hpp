#pragma once

#include <stdexcept>
#include <string>

namespace cg {

struct FieldMismatch : std::invalid_argument {
    FieldMismatch() : std::invalid_argument("operands live in different fields") {}
};

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch() : std::invalid_argument("matrix dimensions do not match") {}
};

struct DimensionTooSmall : std::invalid_argument {
    explicit DimensionTooSmall(int n)
        : std::invalid_argument("dimension " + std::to_string(n) +
                                " is below the minimum of 3") {}
};

struct DimensionTooLarge : std::invalid_argument {
    explicit DimensionTooLarge(int n)
        : std::invalid_argument("dimension " + std::to_string(n) +
                                " exceeds the configured maximum") {}
};

struct NotPrime : std::invalid_argument {
    explicit NotPrime(long long p)
        : std::invalid_argument(std::to_string(p) + " is not a prime modulus") {}
};

struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("operation undefined for the zero polynomial") {}
};

struct DegreeLimitExceeded : std::runtime_error {
    explicit DegreeLimitExceeded(int deg, int cap)
        : std::runtime_error("rational factorization degree " + std::to_string(deg) +
                             " exceeds the cap of " + std::to_string(cap)) {}
};

struct NotADivisor : std::invalid_argument {
    NotADivisor() : std::invalid_argument("polynomial is not a nontrivial divisor") {}
};

struct NotCoprime : std::invalid_argument {
    NotCoprime() : std::invalid_argument("divisor and cofactor are not coprime") {}
};

struct NotDerogatory : std::invalid_argument {
    NotDerogatory() : std::invalid_argument("matrix has a single invariant factor") {}
};

struct NotNilpotent : std::invalid_argument {
    NotNilpotent() : std::invalid_argument("matrix is not nilpotent") {}
};

struct ZeroInput : std::invalid_argument {
    ZeroInput() : std::invalid_argument("input matrix is zero") {}
};

struct CentralInput : std::invalid_argument {
    CentralInput() : std::invalid_argument("input matrix is central (a scalar matrix)") {}
};

struct IdenticalInputs : std::invalid_argument {
    IdenticalInputs() : std::invalid_argument("endpoints coincide; the graph has no loops") {}
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(unsigned long long need, unsigned long long budget)
        : std::runtime_error(need == 0
                                 ? "enumeration exceeds the budget of " + std::to_string(budget)
                                 : "enumeration of " + std::to_string(need) +
                                       " matrices exceeds the budget of " +
                                       std::to_string(budget)) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cg
