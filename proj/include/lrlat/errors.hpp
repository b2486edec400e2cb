#ifndef LRLAT_ERRORS_HPP
#define LRLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrlat {

// Invalid experiment configuration (bad keys, failed guards at validation time).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric guard tripped during computation (singular mode, degenerate fit, ...).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / serialization failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lrlat

#endif
