#ifndef SWAY_ERRORS_HPP
#define SWAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sway {

// Error taxonomy maps onto the CLI exit codes: configuration problems exit 2,
// model/CNF problems exit 3, broken internal invariants exit 4.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches: wrong vector length, unknown dimension, malformed call.
struct StructuralError : Error {
    using Error::Error;
};

// A candidate violates its model's validity predicate.
struct ValidityError : Error {
    using Error::Error;
};

// Bad or missing configuration (files, bounds not calibrated, rejected pairings).
struct ConfigError : Error {
    using Error::Error;
};

// An operation was called in a state it does not accept (e.g. unevaluated rep).
struct StateError : Error {
    using Error::Error;
};

// DIMACS or data-file parse failure; line is 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

struct UnsatError : Error {
    using Error::Error;
};

} // namespace sway

#endif
