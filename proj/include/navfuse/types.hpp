#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace navfuse {

using Vec3  = Eigen::Vector3d;
using Mat3  = Eigen::Matrix3d;
using VecX  = Eigen::VectorXd;
using Mat3X = Eigen::Matrix3Xd;

/// Every particle weight has collapsed to zero mass (all log-weights -inf).
struct AllWeightsZero : std::runtime_error {
  AllWeightsZero() : std::runtime_error("all particle weights are zero") {}
};

/// A particle set too small for the requested moment fit.
struct DegenerateSet : std::runtime_error {
  explicit DegenerateSet(const std::string& what) : std::runtime_error(what) {}
};

/// Every residual vote underflowed for every particle; the cloud is
/// inconsistent with all measurements at once.
struct DegenerateVotes : std::runtime_error {
  DegenerateVotes() : std::runtime_error("all residual votes underflowed for every particle") {}
};

struct LengthMismatch : std::runtime_error {
  LengthMismatch(Eigen::Index lhs, Eigen::Index rhs)
      : std::runtime_error("distribution lengths differ: " + std::to_string(lhs) +
                           " vs " + std::to_string(rhs)) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace navfuse
