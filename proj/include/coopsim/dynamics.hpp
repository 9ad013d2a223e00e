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

#include "coopsim/world.hpp"

namespace coopsim {

struct ControlCommand {
  double accel_cmd{0.0};  // m/s^2
  double steer_cmd{0.0};  // rad
};

struct VehicleLimits {
  double accel_min{-6.0};
  double accel_max{3.0};
  double steer_max{0.6};
};

/// Kinematic bicycle forward-Euler step. Commands are saturated to the
/// limits before integration; speed is floored at zero (no reverse).
VehicleState step_bicycle(const VehicleState& state, const ControlCommand& cmd, double dt,
                          const VehicleLimits& limits = {});

}  // namespace coopsim
