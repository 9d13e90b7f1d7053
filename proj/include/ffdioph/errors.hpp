#pragma once

#include <stdexcept>
#include <string>

namespace ffdioph {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& msg) : Error(msg) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

struct DivideByZero : Error {
    explicit DivideByZero(const std::string& msg) : Error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

/// A value is not determined at the currently tracked precision.
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& msg) : Error(msg) {}
};

struct SingularBasis : Error {
    explicit SingularBasis(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct WitnessTooWeak : Error {
    explicit WitnessTooWeak(const std::string& msg) : Error(msg) {}
};

struct NonConvergent : Error {
    explicit NonConvergent(const std::string& msg) : Error(msg) {}
};

struct RepeatedPoint : Error {
    explicit RepeatedPoint(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace ffdioph
