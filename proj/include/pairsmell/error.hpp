#ifndef PAIRSMELL_ERROR_HPP_
#define PAIRSMELL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pairsmell {

// Base class for all toolchain errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input stream (JSON, log text, config).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input violating a contract (dangling ids,
// duplicate paths, mismatched universes).
struct ValidationError : Error {
    using Error::Error;
};

// Out-of-range or inconsistent arguments (k, pair indices, limits).
struct ParameterError : Error {
    using Error::Error;
};

// Filesystem or subprocess failure.
struct IoError : Error {
    using Error::Error;
};

// Not enough observations to produce a result (trend fitting, snapshots).
struct InsufficientDataError : Error {
    using Error::Error;
};

}  // namespace pairsmell

#endif  // PAIRSMELL_ERROR_HPP_
