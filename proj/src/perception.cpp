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

#include "coopsim/perception.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coopsim {

namespace {

// Distance along the ray to an oriented rectangle, or +inf on a miss.
// Slab test in the box frame; origins inside the box hit at distance 0.
double ray_box_distance(const Vec2& origin, double angle, const OrientedBox& box) {
  const double c = std::cos(box.yaw);
  const double s = std::sin(box.yaw);
  const Vec2 rel = origin - Vec2{box.cx, box.cy};
  const Vec2 o{c * rel.x() + s * rel.y(), -s * rel.x() + c * rel.y()};
  const double world_dx = std::cos(angle);
  const double world_dy = std::sin(angle);
  const Vec2 d{c * world_dx + s * world_dy, -s * world_dx + c * world_dy};

  double t_enter = -std::numeric_limits<double>::infinity();
  double t_exit = std::numeric_limits<double>::infinity();
  const double half[2] = {0.5 * box.length, 0.5 * box.width};
  for (int axis = 0; axis < 2; ++axis) {
    if (std::abs(d[axis]) < 1e-12) {
      if (std::abs(o[axis]) > half[axis]) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    double t0 = (-half[axis] - o[axis]) / d[axis];
    double t1 = (half[axis] - o[axis]) / d[axis];
    if (t0 > t1) {
      std::swap(t0, t1);
    }
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
  }
  if (t_exit < std::max(t_enter, 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return std::max(t_enter, 0.0);
}

}  // namespace

HitRecord simulate_lidar(const Scene& scene, const std::string& sensor_id,
                         const LidarConfig& config) {
  const VehicleState& sensor = scene.at(sensor_id);
  const Vec2 origin = sensor.pose.position();

  struct Target {
    const VehicleState* vehicle;
    OrientedBox box;
  };
  std::vector<Target> targets;
  targets.reserve(scene.vehicles.size());
  for (const VehicleState& v : scene.vehicles) {
    if (v.id != sensor_id) {
      targets.push_back({&v, footprint(v)});
    }
  }

  HitRecord hits;
  for (int beam = 0; beam < config.beams; ++beam) {
    const double angle = sensor.pose.yaw + 2.0 * kPi * beam / config.beams;
    double best_dist = config.max_range;
    const Target* best = nullptr;
    for (const Target& target : targets) {
      const double dist = ray_box_distance(origin, angle, target.box);
      if (dist < best_dist) {
        best_dist = dist;
        best = &target;
      }
    }
    if (best != nullptr) {
      ++hits[best->vehicle->id];
    }
  }
  return hits;
}

std::vector<Detection> detect(const Scene& scene, const std::string& agent_id,
                              const HitRecord& hits, const LidarConfig& config, RngStream& rng) {
  const VehicleState& agent = scene.at(agent_id);
  std::vector<Detection> detections;
  for (const auto& [target_id, hit_count] : hits) {
    if (hit_count < config.min_hits) {
      continue;
    }
    const VehicleState* target = scene.find(target_id);
    if (target == nullptr || target_id == agent_id) {
      continue;
    }
    const bool dropped = rng.uniform01() < config.dropout_p;
    const double nx = rng.normal(0.0, config.sigma_pos);
    const double ny = rng.normal(0.0, config.sigma_pos);
    const double nyaw = rng.normal(0.0, config.sigma_yaw);
    if (dropped) {
      continue;
    }
    OrientedBox world_box = footprint(*target);
    world_box.cx += nx;
    world_box.cy += ny;
    world_box.yaw = normalize_angle(world_box.yaw + nyaw);
    Detection det;
    det.box = transform_to_frame(world_box, agent.pose);
    det.confidence = 1.0 - std::exp(-static_cast<double>(hit_count) / 10.0);
    det.source = agent_id;
    detections.push_back(std::move(det));
  }
  return detections;
}

std::vector<Detection> fuse_late(const std::map<std::string, std::vector<Detection>>& per_agent,
                                 const std::map<std::string, Pose2D>& source_poses,
                                 const Pose2D& ego_pose, double nms_iou) {
  std::vector<Detection> pool;
  for (const auto& [agent_id, detections] : per_agent) {
    const auto pose_it = source_poses.find(agent_id);
    if (pose_it == source_poses.end()) {
      throw std::domain_error("fuse_late: unknown source pose for agent " + agent_id);
    }
    for (const Detection& det : detections) {
      Detection moved = det;
      const OrientedBox world_box = transform_to_world(det.box, pose_it->second);
      moved.box = transform_to_frame(world_box, ego_pose);
      pool.push_back(std::move(moved));
    }
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Detection& a, const Detection& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return a.source < b.source;
  });
  std::vector<Detection> kept;
  for (const Detection& candidate : pool) {
    bool suppressed = false;
    for (const Detection& winner : kept) {
      if (box_iou_bev(candidate.box, winner.box) >= nms_iou) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) {
      kept.push_back(candidate);
    }
  }
  return kept;
}

HitRecord sum_hits(const std::map<std::string, HitRecord>& per_agent) {
  HitRecord total;
  for (const auto& [agent_id, hits] : per_agent) {
    for (const auto& [target_id, count] : hits) {
      total[target_id] += count;
    }
  }
  return total;
}

std::vector<Detection> fuse_early(const std::map<std::string, HitRecord>& per_agent,
                                  const Scene& scene, const std::string& ego_id,
                                  const LidarConfig& config, RngStream& rng) {
  HitRecord pooled = sum_hits(per_agent);
  pooled.erase(ego_id);
  return detect(scene, ego_id, pooled, config, rng);
}

}  // namespace coopsim
