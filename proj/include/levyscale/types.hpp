#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace levyscale {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Rejected configuration or parameters (CLI exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A simulated trajectory left the admissible range.
struct BlowupError : std::runtime_error {
  BlowupError(const std::string& what, long step) : std::runtime_error(what), step_index(step) {}
  long step_index;
};

}  // namespace levyscale
