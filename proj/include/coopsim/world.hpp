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

#include <memory>
#include <string>
#include <vector>

#include "coopsim/geometry.hpp"

namespace coopsim {

struct LaneGraph;

enum class AgentRole {
  kPlatoonLeader,
  kPlatoonMember,
  kMergingCav,
  kBackground,
  kInfrastructure,
};

std::string to_string(AgentRole role);
AgentRole agent_role_from_string(const std::string& text);

/// True iff the role carries a V2X radio and the surrogate sensor stack.
bool is_connected_role(AgentRole role);

struct VehicleState {
  std::string id;
  Pose2D pose;
  double speed{0.0};
  double accel{0.0};
  double steer{0.0};
  double length{4.5};
  double width{2.0};
  double wheelbase{2.8};
  AgentRole role{AgentRole::kBackground};
};

OrientedBox footprint(const VehicleState& state);

/// Bumper-to-bumper distance from ego's front to leader's rear, measured
/// along ego's heading. Negative once the footprints overlap longitudinally.
double bumper_gap(const VehicleState& ego, const VehicleState& leader);

/// Immutable snapshot of the world at one instant.
struct Scene {
  double time{0.0};
  std::vector<VehicleState> vehicles;
  std::string ego_id;
  std::shared_ptr<const LaneGraph> map;

  const VehicleState* find(const std::string& id) const;
  const VehicleState& at(const std::string& id) const;
};

/// Checks ego presence and id uniqueness; throws std::invalid_argument.
void validate_scene(const Scene& scene);

}  // namespace coopsim
