#pragma once

#include <stdexcept>
#include <string>

namespace vassiliev {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAKnot : public Error {
public:
    using Error::Error;
};

class InvalidGroup : public Error {
public:
    using Error::Error;
};

class DivisionByZeroSeries : public Error {
public:
    using Error::Error;
};

/// Raised when a series result is not known to the degree the caller asked for.
class TruncationUnderflow : public Error {
public:
    using Error::Error;
};

class DegreeExceeded : public Error {
public:
    using Error::Error;
};

class CancellationFailure : public Error {
public:
    using Error::Error;
};

class SingularBracket : public Error {
public:
    using Error::Error;
};

class ZeroCasimirDivision : public Error {
public:
    using Error::Error;
};

class AnsatzMismatch : public Error {
public:
    using Error::Error;
};

/// Solve failures carry the perturbative order at which they happened.
class OrderError : public Error {
public:
    OrderError(int order, const std::string& what) : Error(what), order_(order) {}
    int order() const noexcept { return order_; }

private:
    int order_;
};

class RankDeficient : public OrderError {
public:
    using OrderError::OrderError;
};

class Inconsistent : public OrderError {
public:
    using OrderError::OrderError;
};

}  // namespace vassiliev
