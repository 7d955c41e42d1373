#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace interlace {

// Division by zero or a non-invertible operation on an exact value.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The operation exists for some scalar kinds but not this one (e.g. polynomial division).
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A caller broke a documented precondition.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed text input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An internal assertion of an algorithm failed. The partial trace is kept for diagnosis.
class IntegrityError : public std::logic_error {
public:
    IntegrityError(const std::string& what, std::vector<std::string> trace = {})
        : std::logic_error(what), trace_(std::move(trace)) {}
    const std::vector<std::string>& trace() const { return trace_; }

private:
    std::vector<std::string> trace_;
};

// Raised when an involution is asked to act on a network whose bottleneck is smaller than k,
// where the set of path pairs it would act on is empty.
class VacuousDomain : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace interlace
