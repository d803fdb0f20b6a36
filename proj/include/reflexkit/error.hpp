#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace reflexkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input does not satisfy the precondition of an operation. `reason()` is a
// short snake_case code suitable for machine consumption.
class PreconditionError : public Error {
public:
    PreconditionError(std::string reason, const std::string& message)
        : Error(message), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A check that a proven statement guarantees has failed. Seeing one of these
// means a bug in this library (or in the mathematics).
class TheoremViolation : public Error {
public:
    TheoremViolation(std::string check, const std::string& message)
        : Error(check + ": " + message), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

} // namespace reflexkit
