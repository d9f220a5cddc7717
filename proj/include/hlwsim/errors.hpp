#pragma once

#include <stdexcept>
#include <string>

namespace hlwsim {

// Invalid configuration or malformed input file. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required artifact (dataset, checkpoint) is absent or incompatible. CLI exit code 3.
struct MissingPrereqError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver or training aborted (non-convergence budget exceeded, non-finite loss). CLI exit code 4.
struct SolverAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hlwsim
