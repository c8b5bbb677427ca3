#pragma once

#include <stdexcept>
#include <string>

namespace rigidcount {

// Malformed graph input; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A caller violated an operation precondition (bad vertex, invalid cut, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation requires a rigid graph and the input is flexible.
class NotRigidError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A reduction rule was invoked on a graph that does not satisfy its hypothesis.
class RuleInapplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The pinned vertex pair has (numerically) isotropic separation, so the
// canonical position is undefined.
class IsotropicEdgeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Endpoint clustering produced a cluster whose diameter is far above eps.
class ClusteringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric run produced an internally inconsistent solution count
// (not divisible by four, repeated endpoints, canonical classes of the
// wrong size).  Signals tracking loss; rerun with a tighter config.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rigidcount
