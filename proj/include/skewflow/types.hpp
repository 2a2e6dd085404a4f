#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace skewflow {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;

/// Rotated boundary variables are undefined at this state
/// (e.g. the incompressible W contains p/u_n and u_n ~ 0).
struct DegenerateRotation : std::runtime_error {
  explicit DegenerateRotation(const std::string& msg) : std::runtime_error(msg) {}
};

/// A state violates a model positivity constraint; the message names the component.
struct PositivityError : std::domain_error {
  explicit PositivityError(const std::string& msg) : std::domain_error(msg) {}
};

/// Time integration lost admissibility; carries the offending node and time.
struct AdmissibilityLoss : std::runtime_error {
  AdmissibilityLoss(const std::string& msg, int node_i, int node_j, double time)
      : std::runtime_error(msg), i(node_i), j(node_j), t(time) {}
  int i;
  int j;
  double t;
};

} // namespace skewflow
