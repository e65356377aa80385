#pragma once

#include <stdexcept>
#include <string>

namespace qrabi {

// Scenario / configuration problems. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures; messages carry the offending path. CLI exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fock truncation could not reach the requested mass within the hard cap.
struct TruncationError : std::runtime_error {
    TruncationError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_mass(achieved) {}
    double achieved_mass;
};

}  // namespace qrabi
