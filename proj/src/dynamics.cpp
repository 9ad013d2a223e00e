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

#include "coopsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopsim {

VehicleState step_bicycle(const VehicleState& state, const ControlCommand& cmd, double dt,
                          const VehicleLimits& limits) {
  if (!(dt > 0.0)) {
    throw std::domain_error("step_bicycle: dt must be positive");
  }
  if (!std::isfinite(cmd.accel_cmd) || !std::isfinite(cmd.steer_cmd) ||
      !std::isfinite(state.speed) || !std::isfinite(state.pose.x) ||
      !std::isfinite(state.pose.y) || !std::isfinite(state.pose.yaw)) {
    throw std::domain_error("step_bicycle: non-finite input");
  }
  const double accel = std::clamp(cmd.accel_cmd, limits.accel_min, limits.accel_max);
  const double steer = std::clamp(cmd.steer_cmd, -limits.steer_max, limits.steer_max);

  VehicleState next = state;
  next.pose.x = state.pose.x + state.speed * std::cos(state.pose.yaw) * dt;
  next.pose.y = state.pose.y + state.speed * std::sin(state.pose.yaw) * dt;
  next.pose.yaw =
      normalize_angle(state.pose.yaw + state.speed / state.wheelbase * std::tan(steer) * dt);
  next.speed = std::max(0.0, state.speed + accel * dt);
  next.accel = accel;
  next.steer = steer;
  return next;
}

}  // namespace coopsim
