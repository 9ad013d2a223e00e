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

#include <stdexcept>
#include <string>
#include <vector>

#include "coopsim/lane_graph.hpp"

namespace coopsim {

struct LanePoint {
  std::string lane_id;
  double s{0.0};
};

struct Route {
  std::vector<std::string> lane_ids;
  double cost{0.0};  // arc length from start to goal
};

class NoRouteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal-arc-length lane sequence from start to goal. A* with the
/// straight-line distance to the goal as heuristic (admissible whenever
/// successor lanes continue where their predecessor ends).
Route plan_route(const LaneGraph& graph, const LanePoint& start, const LanePoint& goal);

/// Natural cubic spline through (u_i, y_i) knots; second derivative is zero
/// at both ends.
class CubicSpline1D {
 public:
  CubicSpline1D(std::vector<double> knots, std::vector<double> values);

  double value(double u) const;
  double derivative(double u) const;
  double second_derivative(double u) const;

 private:
  std::size_t segment(double u) const;

  std::vector<double> u_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at knots
};

/// Planar spline parameterized by cumulative chord length.
class CubicSpline2D {
 public:
  /// Throws std::domain_error on fewer than 2 or duplicate consecutive
  /// waypoints.
  explicit CubicSpline2D(const std::vector<Vec2>& waypoints);

  Vec2 position(double u) const;
  double heading(double u) const;
  double total_length() const { return knots_.back(); }
  const std::vector<double>& knots() const { return knots_; }
  Vec2 second_derivative(double u) const;

 private:
  std::vector<double> knots_;
  CubicSpline1D x_;
  CubicSpline1D y_;
};

struct TrajectorySample {
  double t{0.0};
  double x{0.0};
  double y{0.0};
  double yaw{0.0};
  double v{0.0};
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

/// Spline trajectory through the waypoints, resampled at a fixed time step.
/// speeds holds the target speed at each waypoint (all positive) and is
/// interpolated linearly along the path.
Trajectory fit_cubic_spline(const std::vector<Vec2>& waypoints, const std::vector<double>& speeds,
                            double dt);

/// Polyline path for trackers. Thin wrapper over the polyline helpers.
struct Path2D {
  std::vector<Vec2> points;
  std::vector<double> cumulative_s;

  static Path2D from_points(std::vector<Vec2> pts);
  double length() const { return cumulative_s.empty() ? 0.0 : cumulative_s.back(); }
  Vec2 point_at(double s) const { return polyline_point_at(points, cumulative_s, s); }
  double heading_at(double s) const { return polyline_heading_at(points, cumulative_s, s); }
  PolylineProjection project(const Vec2& p) const {
    return project_to_polyline(points, cumulative_s, p);
  }
};

}  // namespace coopsim
