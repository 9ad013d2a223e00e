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

#include "coopsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace coopsim {

double normalize_angle(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) {
    r += 2.0 * kPi;
  }
  return r;
}

Pose2D::Pose2D(double x_in, double y_in, double yaw_in) : x(x_in), y(y_in), yaw(normalize_angle(yaw_in)) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(yaw)) {
    throw std::domain_error("Pose2D: coordinates must be finite");
  }
}

Vec2 Pose2D::forward() const { return {std::cos(yaw), std::sin(yaw)}; }

Pose2D compose(const Pose2D& a, const Pose2D& b) {
  const double c = std::cos(a.yaw);
  const double s = std::sin(a.yaw);
  return {a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y, a.yaw + b.yaw};
}

Pose2D inverse(const Pose2D& p) {
  const double c = std::cos(p.yaw);
  const double s = std::sin(p.yaw);
  return {-(c * p.x + s * p.y), -(-s * p.x + c * p.y), -p.yaw};
}

Vec2 to_world(const Pose2D& frame, const Vec2& local) {
  const double c = std::cos(frame.yaw);
  const double s = std::sin(frame.yaw);
  return {frame.x + c * local.x() - s * local.y(), frame.y + s * local.x() + c * local.y()};
}

Vec2 to_frame(const Pose2D& frame, const Vec2& world) {
  const double c = std::cos(frame.yaw);
  const double s = std::sin(frame.yaw);
  const Vec2 d = world - frame.position();
  return {c * d.x() + s * d.y(), -s * d.x() + c * d.y()};
}

std::array<Vec2, 4> box_corners(const OrientedBox& box) {
  const double c = std::cos(box.yaw);
  const double s = std::sin(box.yaw);
  const Vec2 center{box.cx, box.cy};
  const Vec2 ex = 0.5 * box.length * Vec2{c, s};
  const Vec2 ey = 0.5 * box.width * Vec2{-s, c};
  return {center + ex - ey, center + ex + ey, center - ex + ey, center - ex - ey};
}

OrientedBox transform_to_frame(const OrientedBox& box, const Pose2D& frame) {
  const Vec2 local = to_frame(frame, {box.cx, box.cy});
  return {local.x(), local.y(), box.length, box.width, normalize_angle(box.yaw - frame.yaw)};
}

OrientedBox transform_to_world(const OrientedBox& box, const Pose2D& frame) {
  const Vec2 world = to_world(frame, {box.cx, box.cy});
  return {world.x(), world.y(), box.length, box.width, normalize_angle(box.yaw + frame.yaw)};
}

double polygon_area(const std::vector<Vec2>& polygon) {
  if (polygon.size() < 3) {
    return 0.0;
  }
  double twice_area = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Vec2& p = polygon[i];
    const Vec2& q = polygon[(i + 1) % polygon.size()];
    twice_area += cross2(p, q);
  }
  return 0.5 * std::abs(twice_area);
}

namespace {

Vec2 edge_intersection(const Vec2& a, const Vec2& b, const Vec2& p, const Vec2& q) {
  const Vec2 ab = b - a;
  const Vec2 pq = q - p;
  const double denom = cross2(pq, ab);
  const double t = cross2(ab, p - a) / -denom;
  return p + t * pq;
}

}  // namespace

std::vector<Vec2> clip_polygon(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
  std::vector<Vec2> output = subject;
  for (std::size_t i = 0; i < clip.size() && !output.empty(); ++i) {
    const Vec2& a = clip[i];
    const Vec2& b = clip[(i + 1) % clip.size()];
    const Vec2 ab = b - a;
    const std::vector<Vec2> input = std::move(output);
    output.clear();
    for (std::size_t j = 0; j < input.size(); ++j) {
      const Vec2& p = input[j];
      const Vec2& q = input[(j + 1) % input.size()];
      const bool p_inside = cross2(ab, p - a) >= 0.0;
      const bool q_inside = cross2(ab, q - a) >= 0.0;
      if (p_inside) {
        output.push_back(p);
      }
      if (p_inside != q_inside) {
        output.push_back(edge_intersection(a, b, p, q));
      }
    }
  }
  return output;
}

double box_intersection_area(const OrientedBox& a, const OrientedBox& b) {
  const auto ca = box_corners(a);
  const auto cb = box_corners(b);
  const std::vector<Vec2> sa(ca.begin(), ca.end());
  const std::vector<Vec2> sb(cb.begin(), cb.end());
  return polygon_area(clip_polygon(sa, sb));
}

namespace {

std::tuple<double, double, double, double, double> box_key(const OrientedBox& b) {
  return {b.cx, b.cy, b.length, b.width, b.yaw};
}

}  // namespace

std::vector<double> polyline_arc_lengths(const std::vector<Vec2>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("polyline needs at least 2 points");
  }
  std::vector<double> cumulative(points.size(), 0.0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double seg = (points[i] - points[i - 1]).norm();
    if (!(seg > 0.0)) {
      throw std::invalid_argument("polyline has repeated point at index " + std::to_string(i));
    }
    cumulative[i] = cumulative[i - 1] + seg;
  }
  return cumulative;
}

namespace {

std::size_t polyline_segment_index(const std::vector<double>& cumulative, double s) {
  if (s <= cumulative.front()) {
    return 0;
  }
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
  const std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
  return std::min(idx, cumulative.size() - 1) - 1;
}

}  // namespace

Vec2 polyline_point_at(const std::vector<Vec2>& points, const std::vector<double>& cumulative,
                       double s) {
  const double clamped = std::clamp(s, 0.0, cumulative.back());
  const std::size_t i = polyline_segment_index(cumulative, clamped);
  const double t = (clamped - cumulative[i]) / (cumulative[i + 1] - cumulative[i]);
  return points[i] + t * (points[i + 1] - points[i]);
}

double polyline_heading_at(const std::vector<Vec2>& points, const std::vector<double>& cumulative,
                           double s) {
  const double clamped = std::clamp(s, 0.0, cumulative.back());
  const std::size_t i = polyline_segment_index(cumulative, clamped);
  const Vec2 d = points[i + 1] - points[i];
  return std::atan2(d.y(), d.x());
}

PolylineProjection project_to_polyline(const std::vector<Vec2>& points,
                                       const std::vector<double>& cumulative, const Vec2& p) {
  PolylineProjection best;
  double best_dist2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Vec2& a = points[i];
    const Vec2& b = points[i + 1];
    const Vec2 ab = b - a;
    const double seg_len2 = ab.squaredNorm();
    const double t = std::clamp((p - a).dot(ab) / seg_len2, 0.0, 1.0);
    const Vec2 proj = a + t * ab;
    const double dist2 = (p - proj).squaredNorm();
    if (dist2 < best_dist2) {
      best_dist2 = dist2;
      const double seg_len = std::sqrt(seg_len2);
      best.s = cumulative[i] + t * seg_len;
      best.d = cross2(ab / seg_len, p - proj);
      best.distance = std::sqrt(dist2);
    }
  }
  return best;
}

double box_iou_bev(const OrientedBox& a, const OrientedBox& b) {
  for (const OrientedBox* box : {&a, &b}) {
    if (!std::isfinite(box->cx) || !std::isfinite(box->cy) || !std::isfinite(box->yaw) ||
        !(box->length > 0.0) || !(box->width > 0.0)) {
      throw std::domain_error("box_iou_bev: degenerate or non-finite box");
    }
  }
  if (box_key(a) == box_key(b)) {
    return 1.0;
  }
  // Canonical argument order makes the result exactly symmetric.
  if (box_key(b) < box_key(a)) {
    return box_iou_bev(b, a);
  }
  const double ra = 0.5 * std::hypot(a.length, a.width);
  const double rb = 0.5 * std::hypot(b.length, b.width);
  const double center_dist = std::hypot(a.cx - b.cx, a.cy - b.cy);
  if (center_dist > ra + rb) {
    return 0.0;
  }
  const double inter = box_intersection_area(a, b);
  const double uni = box_area(a) + box_area(b) - inter;
  if (!(uni > 0.0)) {
    throw std::domain_error("box_iou_bev: degenerate union");
  }
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace coopsim
