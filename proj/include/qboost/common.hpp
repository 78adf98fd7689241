#pragma once
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qboost {

// Sentinel for absent feature values. Sorts below every real value, so
// missing entries always land in bin 0 and route left at every split.
inline constexpr double kMissing = -std::numeric_limits<double>::infinity();

inline constexpr int kModelFormatVersion = 1;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qboost
