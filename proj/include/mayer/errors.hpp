#pragma once

#include <stdexcept>
#include <string>

namespace mayer {

/// Numerical failure: non-convergence, invalid bracket, rejected step size,
/// or a trajectory leaving the admissible domain. Maps to CLI exit code 2.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure while reading config or writing outputs. Maps to CLI
/// exit code 3.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mayer
