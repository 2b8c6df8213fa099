#pragma once

#include <stdexcept>
#include <string>

namespace fluidcc {

// Invalid run configuration (bad parameter combination, malformed grid, ...).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The fixed-point search found no root inside (0, C].
class NoEquilibriumError : public std::runtime_error {
public:
    explicit NoEquilibriumError(const std::string& what) : std::runtime_error(what) {}
};

// Classification window has fewer than 3 samples on one side.
class WindowTooSmallError : public std::runtime_error {
public:
    explicit WindowTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

// Plot requested for a series with no samples.
class EmptySeriesError : public std::runtime_error {
public:
    explicit EmptySeriesError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fluidcc
