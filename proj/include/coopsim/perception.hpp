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

#include <map>
#include <string>
#include <vector>

#include "coopsim/rng.hpp"
#include "coopsim/world.hpp"

namespace coopsim {

struct LidarConfig {
  int beams{360};
  double max_range{120.0};
  double sigma_pos{0.2};   // m, detection center noise
  double sigma_yaw{0.02};  // rad
  double dropout_p{0.0};   // per-target miss probability
  int min_hits{1};         // beams required for detectability
};

/// Beam hits per target id for one sensor sweep.
using HitRecord = std::map<std::string, int>;

struct Detection {
  OrientedBox box;  // in the detecting agent's frame
  double confidence{0.0};
  std::string source;
};

/// Casts equiangular rays from the sensor vehicle's pose; each ray credits
/// the nearest vehicle rectangle within max_range, so farther vehicles on
/// the same ray are occluded. The sensor's own footprint is excluded.
HitRecord simulate_lidar(const Scene& scene, const std::string& sensor_id,
                         const LidarConfig& config);

/// Rule-based detector: every target reaching min_hits yields a detection
/// unless dropped; boxes are true footprints with Gaussian pose noise,
/// expressed in the agent's frame. Confidence is 1 - exp(-hits / 10).
std::vector<Detection> detect(const Scene& scene, const std::string& agent_id,
                              const HitRecord& hits, const LidarConfig& config, RngStream& rng);

/// Late fusion: transforms every agent's detections into the ego frame and
/// suppresses duplicates by greedy confidence-ordered NMS at IoU >= nms_iou.
/// Throws std::domain_error when a detection's source pose is unknown.
std::vector<Detection> fuse_late(const std::map<std::string, std::vector<Detection>>& per_agent,
                                 const std::map<std::string, Pose2D>& source_poses,
                                 const Pose2D& ego_pose, double nms_iou = 0.15);

/// Early fusion: sums per-target hits across agents before thresholding,
/// then runs the detector once from the ego perspective.
std::vector<Detection> fuse_early(const std::map<std::string, HitRecord>& per_agent,
                                  const Scene& scene, const std::string& ego_id,
                                  const LidarConfig& config, RngStream& rng);

/// Pools hit records by per-target summation.
HitRecord sum_hits(const std::map<std::string, HitRecord>& per_agent);

}  // namespace coopsim
