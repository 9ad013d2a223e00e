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

#include "coopsim/planning.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace coopsim {

namespace {

struct SearchNode {
  double f{0.0};
  double g{0.0};
  std::string lane_id;
  double entry_s{0.0};

  bool operator>(const SearchNode& other) const {
    if (f != other.f) return f > other.f;
    if (lane_id != other.lane_id) return lane_id > other.lane_id;
    return entry_s > other.entry_s;
  }
};

// Arc length where a vehicle leaving `from` enters `to`: the projection of
// the predecessor's end point (zero for end-to-start chains).
double entry_arc_length(const Lane& from, const Lane& to) {
  const PolylineProjection proj =
      project_to_polyline(to.centerline, to.cumulative_s, from.centerline.back());
  return proj.s;
}

}  // namespace

Route plan_route(const LaneGraph& graph, const LanePoint& start, const LanePoint& goal) {
  const Lane& start_lane = graph.at(start.lane_id);
  const Lane& goal_lane = graph.at(goal.lane_id);
  const Vec2 goal_point = goal_lane.point_at(goal.s);

  const auto heuristic = [&](const Lane& lane, double entry_s) {
    return (lane.point_at(entry_s) - goal_point).norm();
  };

  using Key = std::pair<std::string, double>;
  std::map<Key, double> best_g;
  std::map<Key, Key> parent;
  std::priority_queue<SearchNode, std::vector<SearchNode>, std::greater<SearchNode>> open;

  const Key start_key{start.lane_id, start.s};
  best_g[start_key] = 0.0;
  open.push({heuristic(start_lane, start.s), 0.0, start.lane_id, start.s});

  while (!open.empty()) {
    const SearchNode node = open.top();
    open.pop();
    const Key key{node.lane_id, node.entry_s};
    if (node.g > best_g.at(key)) {
      continue;  // stale queue entry
    }
    const Lane& lane = graph.at(node.lane_id);
    if (node.lane_id == goal.lane_id && goal.s >= node.entry_s) {
      Route route;
      route.cost = node.g + (goal.s - node.entry_s);
      Key cursor = key;
      route.lane_ids.push_back(cursor.first);
      while (cursor != start_key) {
        cursor = parent.at(cursor);
        route.lane_ids.push_back(cursor.first);
      }
      std::reverse(route.lane_ids.begin(), route.lane_ids.end());
      return route;
    }
    const double exit_cost = node.g + (lane.length() - node.entry_s);
    const auto succ_it = graph.successors.find(node.lane_id);
    if (succ_it == graph.successors.end()) {
      continue;
    }
    for (const std::string& next_id : succ_it->second) {
      const Lane& next = graph.at(next_id);
      const double entry_s = entry_arc_length(lane, next);
      const Key next_key{next_id, entry_s};
      const auto found = best_g.find(next_key);
      if (found != best_g.end() && found->second <= exit_cost) {
        continue;
      }
      best_g[next_key] = exit_cost;
      parent[next_key] = key;
      open.push({exit_cost + heuristic(next, entry_s), exit_cost, next_id, entry_s});
    }
  }
  throw NoRouteError("no route from lane '" + start.lane_id + "' to lane '" + goal.lane_id + "'");
}

CubicSpline1D::CubicSpline1D(std::vector<double> knots, std::vector<double> values)
    : u_(std::move(knots)), y_(std::move(values)) {
  const std::size_t n = u_.size();
  if (n < 2 || y_.size() != n) {
    throw std::domain_error("CubicSpline1D: need at least 2 knots");
  }
  m_.assign(n, 0.0);
  if (n == 2) {
    return;  // natural spline with two knots is the straight chord
  }
  const std::size_t interior = n - 2;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(interior, interior);
  Eigen::VectorXd rhs(interior);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = u_[i] - u_[i - 1];
    const double h1 = u_[i + 1] - u_[i];
    const std::size_t r = i - 1;
    if (r > 0) {
      A(r, r - 1) = h0 / 6.0;
    }
    A(r, r) = (h0 + h1) / 3.0;
    if (r + 1 < interior) {
      A(r, r + 1) = h1 / 6.0;
    }
    rhs(r) = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
  }
  const Eigen::VectorXd m = A.ldlt().solve(rhs);
  for (std::size_t i = 0; i < interior; ++i) {
    m_[i + 1] = m(i);
  }
}

std::size_t CubicSpline1D::segment(double u) const {
  if (u <= u_.front()) {
    return 0;
  }
  const auto it = std::upper_bound(u_.begin(), u_.end(), u);
  const std::size_t idx = static_cast<std::size_t>(it - u_.begin());
  return std::min(idx, u_.size() - 1) - 1;
}

double CubicSpline1D::value(double u) const {
  const std::size_t i = segment(u);
  const double h = u_[i + 1] - u_[i];
  const double a = (u_[i + 1] - u) / h;
  const double b = (u - u_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline1D::derivative(double u) const {
  const std::size_t i = segment(u);
  const double h = u_[i + 1] - u_[i];
  const double a = (u_[i + 1] - u) / h;
  const double b = (u - u_[i]) / h;
  return (y_[i + 1] - y_[i]) / h +
         ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) * h / 6.0;
}

double CubicSpline1D::second_derivative(double u) const {
  const std::size_t i = segment(u);
  const double h = u_[i + 1] - u_[i];
  const double a = (u_[i + 1] - u) / h;
  const double b = (u - u_[i]) / h;
  return a * m_[i] + b * m_[i + 1];
}

namespace {

std::vector<double> chord_knots(const std::vector<Vec2>& waypoints) {
  if (waypoints.size() < 2) {
    throw std::domain_error("CubicSpline2D: need at least 2 waypoints");
  }
  std::vector<double> knots(waypoints.size(), 0.0);
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const double seg = (waypoints[i] - waypoints[i - 1]).norm();
    if (!(seg > 0.0)) {
      throw std::domain_error("CubicSpline2D: duplicate consecutive waypoint at index " +
                              std::to_string(i));
    }
    knots[i] = knots[i - 1] + seg;
  }
  return knots;
}

std::vector<double> component(const std::vector<Vec2>& pts, int axis) {
  std::vector<double> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[i] = axis == 0 ? pts[i].x() : pts[i].y();
  }
  return out;
}

}  // namespace

CubicSpline2D::CubicSpline2D(const std::vector<Vec2>& waypoints)
    : knots_(chord_knots(waypoints)),
      x_(knots_, component(waypoints, 0)),
      y_(knots_, component(waypoints, 1)) {}

Vec2 CubicSpline2D::position(double u) const { return {x_.value(u), y_.value(u)}; }

double CubicSpline2D::heading(double u) const {
  return std::atan2(y_.derivative(u), x_.derivative(u));
}

Vec2 CubicSpline2D::second_derivative(double u) const {
  return {x_.second_derivative(u), y_.second_derivative(u)};
}

Trajectory fit_cubic_spline(const std::vector<Vec2>& waypoints, const std::vector<double>& speeds,
                            double dt) {
  if (speeds.size() != waypoints.size()) {
    throw std::domain_error("fit_cubic_spline: one speed per waypoint required");
  }
  for (double v : speeds) {
    if (!(v > 0.0)) {
      throw std::domain_error("fit_cubic_spline: speeds must be positive");
    }
  }
  if (!(dt > 0.0)) {
    throw std::domain_error("fit_cubic_spline: dt must be positive");
  }
  const CubicSpline2D spline(waypoints);
  const std::vector<double>& knots = spline.knots();

  // Piecewise-linear speed along the chord parameter.
  const auto speed_at = [&](double u) {
    if (u <= knots.front()) return speeds.front();
    if (u >= knots.back()) return speeds.back();
    const auto it = std::upper_bound(knots.begin(), knots.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    const double t = (u - knots[i]) / (knots[i + 1] - knots[i]);
    return speeds[i] + t * (speeds[i + 1] - speeds[i]);
  };

  Trajectory traj;
  double u = 0.0;
  double t = 0.0;
  const double total = spline.total_length();
  while (true) {
    const double clamped = std::min(u, total);
    const Vec2 p = spline.position(clamped);
    const double v = speed_at(clamped);
    traj.samples.push_back({t, p.x(), p.y(), spline.heading(clamped), v});
    if (u >= total) {
      break;
    }
    u += v * dt;
    t += dt;
  }
  return traj;
}

Path2D Path2D::from_points(std::vector<Vec2> pts) {
  Path2D path;
  path.cumulative_s = polyline_arc_lengths(pts);
  path.points = std::move(pts);
  return path;
}

}  // namespace coopsim
