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
#include <optional>
#include <string>
#include <vector>

#include "coopsim/geometry.hpp"

namespace coopsim {

enum class LaneKind { kMainline, kRamp, kAccelerationLane };

std::string to_string(LaneKind kind);
LaneKind lane_kind_from_string(const std::string& text);

/// Polyline-backed lane. Cumulative arc lengths are precomputed on
/// construction and strictly increasing.
struct Lane {
  std::string id;
  LaneKind kind{LaneKind::kMainline};
  double width{3.6};
  std::vector<Vec2> centerline;
  std::vector<double> cumulative_s;

  /// Recomputes cumulative_s; throws on fewer than 2 points or repeated
  /// consecutive points.
  void rebuild_arc_length();

  double length() const { return cumulative_s.empty() ? 0.0 : cumulative_s.back(); }

  /// Point at arc length s (clamped to [0, length]).
  Vec2 point_at(double s) const;

  /// Tangent heading at arc length s.
  double heading_at(double s) const;

  /// Point + tangent heading at arc length s.
  Pose2D pose_at(double s) const;
};

Lane make_lane(std::string id, LaneKind kind, double width, std::vector<Vec2> centerline);

/// Arc length along the centerline and signed lateral offset (positive to the
/// left of the travel direction).
struct FrenetCoord {
  double s{0.0};
  double d{0.0};
};

/// Nearest-point projection of a pose onto the lane centerline.
FrenetCoord project_to_frenet(const Pose2D& pose, const Lane& lane);

/// Directed lane network. Successor lanes are entered at the arc length
/// nearest to the predecessor's end point (zero for end-to-start chains).
struct LaneGraph {
  std::vector<Lane> lanes;
  std::map<std::string, std::vector<std::string>> successors;
  /// Mainline arc length at which the acceleration lane runs out, when the
  /// map has one.
  std::optional<double> merge_end_s;

  const Lane* find(const std::string& id) const;
  const Lane& at(const std::string& id) const;
};

/// Validates lane references and arc-length monotonicity; throws
/// std::invalid_argument naming the offending lane.
void validate_lane_graph(const LaneGraph& graph);

/// Map file schema:
///   {"lanes":[{"id","kind","width","centerline":[[x,y],...]}],
///    "successors":{"a":["b",...]},"merge_end_s":N}
/// Coordinates in meters, x east, y north.
LaneGraph load_lane_graph(const std::string& path);
LaneGraph lane_graph_from_json_text(const std::string& text);
std::string lane_graph_to_json_text(const LaneGraph& graph);

}  // namespace coopsim
