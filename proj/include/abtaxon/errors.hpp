#pragma once

#include <stdexcept>
#include <string>

namespace abtaxon {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed domain value (non-prime base, zero exponent/rank, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public Error {
public:
    explicit PreconditionError(std::string condition)
        : Error("precondition failed: " + condition), condition_(std::move(condition)) {}

    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

/// A configured budget (group order, enumeration size) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

struct SourcePos {
    int line = 1;
    int column = 1;
};

/// Positioned syntax or validation error from the expression parser.
class ParseError : public Error {
public:
    ParseError(SourcePos pos, std::string expected, std::string found, std::string hint = {})
        : Error(format(pos, expected, found, hint)),
          pos_(pos),
          expected_(std::move(expected)),
          found_(std::move(found)),
          hint_(std::move(hint)) {}

    SourcePos pos() const { return pos_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }
    const std::string& hint() const { return hint_; }

private:
    static std::string format(SourcePos pos, const std::string& expected,
                              const std::string& found, const std::string& hint) {
        std::string msg = "parse error at " + std::to_string(pos.line) + ":" +
                          std::to_string(pos.column) + ": expected " + expected + ", found " +
                          found;
        if (!hint.empty()) msg += " (" + hint + ")";
        return msg;
    }

    SourcePos pos_;
    std::string expected_;
    std::string found_;
    std::string hint_;
};

}  // namespace abtaxon
