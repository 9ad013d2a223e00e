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

#include "coopsim/world.hpp"

#include <set>
#include <stdexcept>

namespace coopsim {

std::string to_string(AgentRole role) {
  switch (role) {
    case AgentRole::kPlatoonLeader:
      return "platoon_leader";
    case AgentRole::kPlatoonMember:
      return "platoon_member";
    case AgentRole::kMergingCav:
      return "merging_cav";
    case AgentRole::kBackground:
      return "background";
    case AgentRole::kInfrastructure:
      return "infrastructure";
  }
  return "background";
}

AgentRole agent_role_from_string(const std::string& text) {
  if (text == "platoon_leader") return AgentRole::kPlatoonLeader;
  if (text == "platoon_member") return AgentRole::kPlatoonMember;
  if (text == "merging_cav") return AgentRole::kMergingCav;
  if (text == "background") return AgentRole::kBackground;
  if (text == "infrastructure") return AgentRole::kInfrastructure;
  throw std::invalid_argument("unknown agent role: " + text);
}

bool is_connected_role(AgentRole role) {
  return role == AgentRole::kPlatoonLeader || role == AgentRole::kPlatoonMember ||
         role == AgentRole::kMergingCav || role == AgentRole::kInfrastructure;
}

OrientedBox footprint(const VehicleState& state) {
  return {state.pose.x, state.pose.y, state.length, state.width, state.pose.yaw};
}

double bumper_gap(const VehicleState& ego, const VehicleState& leader) {
  const Vec2 offset = leader.pose.position() - ego.pose.position();
  const double longitudinal = offset.dot(ego.pose.forward());
  return longitudinal - 0.5 * (ego.length + leader.length);
}

const VehicleState* Scene::find(const std::string& id) const {
  for (const VehicleState& v : vehicles) {
    if (v.id == id) {
      return &v;
    }
  }
  return nullptr;
}

const VehicleState& Scene::at(const std::string& id) const {
  const VehicleState* v = find(id);
  if (v == nullptr) {
    throw std::invalid_argument("unknown vehicle: " + id);
  }
  return *v;
}

void validate_scene(const Scene& scene) {
  std::set<std::string> ids;
  for (const VehicleState& v : scene.vehicles) {
    if (!ids.insert(v.id).second) {
      throw std::invalid_argument("duplicate vehicle id: " + v.id);
    }
  }
  if (ids.count(scene.ego_id) == 0) {
    throw std::invalid_argument("ego vehicle '" + scene.ego_id + "' missing from scene");
  }
}

}  // namespace coopsim
