#pragma once

#include <stdexcept>
#include <string>

namespace impcol {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad degree, missing vertex, partial coloring...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Rotation system that is not a permutation of the adjacency.
class InvalidEmbedding : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Size threshold or time budget exceeded. Never means "unsatisfiable".
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace impcol
