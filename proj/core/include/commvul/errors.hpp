#pragma once

#include <stdexcept>
#include <string>

namespace commvul {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (edge lists, adjacency matrices, partition files).
/// Carries a 1-based line number when one is known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Contract violation: unknown node label, partition/graph mismatch,
/// too few communities, and similar caller mistakes.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Analysis cannot proceed because the input is degenerate
/// (zero feature column, constant sampling range, zero variance).
class DegenerateError : public Error {
public:
    using Error::Error;
};

} // namespace commvul
