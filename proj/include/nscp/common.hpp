#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nscp {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;

/// Thrown for malformed input and out-of-range parameters.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation requires a connected graph.
class DisconnectedGraphError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

inline constexpr const char* kVersion = "0.3.1";

}  // namespace nscp
