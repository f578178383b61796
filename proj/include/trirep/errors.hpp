#pragma once

#include <stdexcept>
#include <string>

namespace trirep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter or argument outside the admissible domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A coefficient or measure is singular at the requested point.
class SingularError : public DomainError {
public:
    using DomainError::DomainError;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Three-term recursion hit a vanishing leading coefficient.
class RecursionBreakdown : public Error {
public:
    RecursionBreakdown(int index, const std::string& what)
        : Error(what + " (recursion breakdown at n = " + std::to_string(index) + ")"), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Numerical integration or iteration did not reach the requested accuracy.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double last, double previous)
        : Error(what), last_(last), previous_(previous) {}
    double last() const noexcept { return last_; }
    double previous() const noexcept { return previous_; }

private:
    double last_;
    double previous_;
};

} // namespace trirep
