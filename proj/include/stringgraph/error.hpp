#ifndef STRINGGRAPH_ERROR_HPP
#define STRINGGRAPH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringgraph {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// process exit codes (see tools/stringgraph.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateId : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class DegenerateGraph : public Error {
public:
    using Error::Error;
};

class ExtractorViolation : public Error {
public:
    using Error::Error;
};

/// An input violated an algorithm precondition. `witness` holds the offending
/// structure (for example the vertices of a forbidden clique), in the vertex
/// indices of the graph the caller passed in.
class PreconditionViolated : public Error {
public:
    PreconditionViolated(const std::string& what, std::vector<std::size_t> witness = {})
        : Error(what), witness_(std::move(witness)) {}

    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

class RefinementFailed : public Error {
public:
    using Error::Error;
};

class NoCoverFound : public Error {
public:
    using Error::Error;
};

class InternalBoundViolation : public Error {
public:
    using Error::Error;
};

class DegenerateDrawing : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// Input exceeds the hard size cap of an exponential-time routine.
class TooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SchemaError : public Error {
public:
    SchemaError(const std::string& field, const std::string& what)
        : Error("field '" + field + "': " + what), field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class BadSpec : public Error {
public:
    using Error::Error;
};

} // namespace stringgraph

#endif // STRINGGRAPH_ERROR_HPP
