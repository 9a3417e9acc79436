#pragma once

#include <stdexcept>
#include <string>

namespace fcoord {

// Bad input data, malformed files, inconsistent configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Divergence, singular systems, NaN states. CLI exit code 1.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fcoord
