#pragma once

#include <stdexcept>
#include <string>

namespace anisoloc {

// Invalid argument value (exit code 2 at the CLI).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An integral that has no finite value for the given parameters.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

// Inputs are individually valid but incompatible (grid too coarse, region too small, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed grid file or CSV.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical breakdown (non-convergence, embedding failure, non-finite result).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace anisoloc
