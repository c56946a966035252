#pragma once

#include <stdexcept>
#include <string>

namespace blade {

// Error taxonomy shared by the library and the CLI.
// The CLI maps these to exit codes: ConfigError -> 2, DataError -> 3,
// NumericError -> 4.

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched array shapes where equal shapes are a contract.
struct ShapeError : ConfigError {
    using ConfigError::ConfigError;
};

// Broken inputs on disk: missing files, bad manifests, undecodable images.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values where finite math is a contract (NaN loss abort).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace blade
