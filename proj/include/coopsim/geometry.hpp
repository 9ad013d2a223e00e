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

#include <array>
#include <vector>

namespace coopsim {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

/// z-component of the 2D cross product.
inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Planar pose; yaw is normalized to (-pi, pi] on construction.
struct Pose2D {
  double x{0.0};
  double y{0.0};
  double yaw{0.0};

  Pose2D() = default;
  Pose2D(double x_in, double y_in, double yaw_in);

  Vec2 position() const { return {x, y}; }
  Vec2 forward() const;
};

/// Rigid composition: the pose of (b expressed in a's frame) in a's parent frame.
Pose2D compose(const Pose2D& a, const Pose2D& b);
Pose2D inverse(const Pose2D& p);

Vec2 to_world(const Pose2D& frame, const Vec2& local);
Vec2 to_frame(const Pose2D& frame, const Vec2& world);

/// Birds-eye rectangle footprint, center (cx, cy), heading yaw.
struct OrientedBox {
  double cx{0.0};
  double cy{0.0};
  double length{1.0};
  double width{1.0};
  double yaw{0.0};
};

/// Counter-clockwise corners, starting front-right.
std::array<Vec2, 4> box_corners(const OrientedBox& box);

inline double box_area(const OrientedBox& box) { return box.length * box.width; }

/// Re-expresses a world-frame box in the given frame.
OrientedBox transform_to_frame(const OrientedBox& box, const Pose2D& frame);

/// Maps a frame-local box back to world coordinates.
OrientedBox transform_to_world(const OrientedBox& box, const Pose2D& frame);

/// Shoelace area of a simple polygon.
double polygon_area(const std::vector<Vec2>& polygon);

/// Sutherland-Hodgman clip of a convex subject polygon against a convex
/// counter-clockwise clip polygon.
std::vector<Vec2> clip_polygon(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip);

/// Overlap area of two oriented rectangles.
double box_intersection_area(const OrientedBox& a, const OrientedBox& b);

/// Exact intersection-over-union of two oriented rectangles.
/// Throws std::domain_error when either box has no area.
double box_iou_bev(const OrientedBox& a, const OrientedBox& b);

/// Cumulative arc lengths of a polyline; throws std::invalid_argument on
/// fewer than 2 points or repeated consecutive points.
std::vector<double> polyline_arc_lengths(const std::vector<Vec2>& points);

/// Point at arc length s (clamped to the polyline extent).
Vec2 polyline_point_at(const std::vector<Vec2>& points, const std::vector<double>& cumulative,
                       double s);

/// Tangent heading at arc length s.
double polyline_heading_at(const std::vector<Vec2>& points, const std::vector<double>& cumulative,
                           double s);

struct PolylineProjection {
  double s{0.0};
  double d{0.0};  // signed, positive left of travel direction
  double distance{0.0};
};

/// Nearest-point projection onto the polyline; ties go to the earlier segment.
PolylineProjection project_to_polyline(const std::vector<Vec2>& points,
                                       const std::vector<double>& cumulative, const Vec2& p);

}  // namespace coopsim
