#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace refl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ConductorMismatch : public Error {
public:
    ConductorMismatch(int a, int b)
        : Error("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnsupportedType : public Error {
public:
    using Error::Error;
};

class GroupTooLarge : public Error {
public:
    GroupTooLarge(std::uint64_t required, std::uint64_t cap)
        : Error("group order " + std::to_string(required) + " exceeds cap " + std::to_string(cap)),
          required_order(required) {}
    std::uint64_t required_order;
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("zero vector is not an admissible eigenvector") {}
};

class EmptyEigenspace : public Error {
public:
    EmptyEigenspace() : Error("eigenspace is zero") {}
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// An invariant-set request that only the quadratic invariant can answer.
class QuadraticOnly : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class ZeroLeadingTerm : public Error {
public:
    ZeroLeadingTerm() : Error("leading term x must be nonzero") {}
};

/// A computed value contradicts N(x) >= bn or an internal cross-check; never expected.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace refl
