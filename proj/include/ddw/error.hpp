#pragma once

#include <stdexcept>
#include <string>

namespace ddw {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument violates an operation's documented precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Parameter set is inconsistent (population size, lambda, fractions ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Object is missing state the operation depends on (e.g. an unevaluated individual).
class InvalidState : public Error {
public:
    using Error::Error;
};

/// Input file does not follow the expected layout.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Input file parsed but its content breaks a dataset invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A field could not be converted; carries the 1-based line number.
class ParseError : public FormatError {
public:
    ParseError(std::size_t line, const std::string& what)
        : FormatError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ddw
