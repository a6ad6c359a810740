#pragma once

#include <stdexcept>
#include <string>

namespace aamcba {

/// Bad input data or configuration. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An estimator or solver could not produce a valid result. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aamcba
