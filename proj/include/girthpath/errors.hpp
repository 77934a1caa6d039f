#pragma once

#include <stdexcept>
#include <string>

namespace girthpath {

// Input that could not be parsed (edge lists, JSON graphs, config strings).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds the configured solver size limits.
struct scale_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search node budget exhausted before the exact answer was certified.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Random instance generation failed after bounded repair attempts.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resampling loop hit the round cap without clearing all bad events.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace girthpath
