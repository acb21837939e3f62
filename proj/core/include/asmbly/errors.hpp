#ifndef ASMBLY_ERRORS_HPP
#define ASMBLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asmbly {

/** Malformed textual input: edge lists, SMILES, JSON, witness files. */
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/** A cap was hit: compound count, hyperedge count, wall clock, or solver node budget. */
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** The requested goal cannot be assembled from the seed set. */
class UnreachableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Structurally invalid argument: cyclic hypergraph where a DAG is required,
    degenerate molecular graph, witness referencing unknown ids, and similar. */
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace asmbly

#endif
