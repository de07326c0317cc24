#pragma once

#include <stdexcept>
#include <string>

namespace rssl {

/// Bad flags, config keys, or option values. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or degenerate input data (CSV problems, bad labels, sizes). CLI exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric failure that survived all retries (non-convergence, degenerate replicates). CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rssl
