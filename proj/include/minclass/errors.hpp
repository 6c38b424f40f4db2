#pragma once

#include <stdexcept>
#include <string>

namespace minclass {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unusable input data: non-finite entries, constant columns,
/// dimension mismatches, missing values or columns.
class InputError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration or violated precondition: bad grids, too-small
/// folds, enumeration budget exceeded, degenerate search states.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The Gram matrix of a candidate model is rank deficient beyond tolerance.
class SingularGramError : public Error {
public:
    using Error::Error;
};

/// Both the Lasso and the Elastic Net supports are empty; no predictor
/// scores can be formed.
class EmptySupportsError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace minclass
