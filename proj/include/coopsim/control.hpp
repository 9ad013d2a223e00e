// Copyright 2026 The coopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "coopsim/dynamics.hpp"
#include "coopsim/planning.hpp"

namespace coopsim {

struct GapControlGains {
  double spacing{0.45};  // 1/s^2
  double speed{0.25};    // 1/s
};

/// Constant-time-gap car-following law:
///   a = k_s (gap - v_ego * tau) + k_v (v_lead - v_ego)
/// with the bumper-to-bumper gap measured along ego's heading. Saturated to
/// the vehicle limits. Throws std::domain_error when the leader is not ahead.
double gap_control(const VehicleState& ego, const VehicleState& leader, double desired_time_gap,
                   const GapControlGains& gains = {}, const VehicleLimits& limits = {});

struct PidGains {
  double kp{1.0};
  double ki{0.0};
  double kd{0.0};
  double integral_limit{10.0};  // anti-windup clamp on the integrated error
};

class PidController {
 public:
  PidController() = default;
  explicit PidController(const PidGains& gains) : gains_(gains) {}

  /// u = kp e + ki * sum(e dt) + kd * de/dt, integral clamped.
  double step(double error, double dt);
  void reset();

 private:
  PidGains gains_{};
  double integral_{0.0};
  double previous_error_{0.0};
  bool has_previous_{false};
};

struct MpcConfig {
  int horizon{20};
  Eigen::Vector4d state_weights{1.0, 1.0, 0.5, 1.0};  // x, y, yaw, v
  Eigen::Vector2d input_weights{0.2, 2.0};            // accel, steer
  VehicleLimits limits{};
};

/// Finite-horizon quadratic tracker on the bicycle model linearized about
/// the reference, solved by backward Riccati recursion with the inputs
/// clipped to the limits. Falls back to the zero-input sequence whenever
/// clipping makes it cheaper, so the returned plan never costs more than
/// doing nothing. reference.samples[0] is taken as the current instant.
ControlCommand mpc_control(const VehicleState& state, const Trajectory& reference,
                           const MpcConfig& config);

/// Predicted quadratic tracking cost of the command sequence the controller
/// settled on (exposed for controller comparisons).
double mpc_plan_cost(const VehicleState& state, const Trajectory& reference,
                     const MpcConfig& config);

struct PurePursuitConfig {
  double lookahead_gain{0.9};  // s of preview per m/s
  double min_lookahead{3.0};
  double max_lookahead{18.0};
};

/// Geometric path tracking: steer = atan(2 L sin(alpha) / Ld) toward a point
/// Ld ahead of the projection of the pose onto the path.
double pure_pursuit_steer(const Pose2D& pose, double speed, double wheelbase, const Path2D& path,
                          const PurePursuitConfig& config = {});

}  // namespace coopsim
