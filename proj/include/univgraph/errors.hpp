#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace univgraph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search or construction would exceed its configured budget.
/// Distinct from a negative answer: nothing is known about the instance.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

/// A precondition on an input graph, game or parameter does not hold.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Malformed game or graph text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A reachable Eve vertex with outgoing edges has no strategy choice.
class UndefinedStrategy : public Error {
public:
    explicit UndefinedStrategy(std::size_t vertex)
        : Error("undefined strategy at reachable Eve vertex " + std::to_string(vertex)),
          vertex_(vertex) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace univgraph
