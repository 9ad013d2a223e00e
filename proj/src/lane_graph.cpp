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

#include "coopsim/lane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coopsim {

using nlohmann::json;

std::string to_string(LaneKind kind) {
  switch (kind) {
    case LaneKind::kMainline:
      return "mainline";
    case LaneKind::kRamp:
      return "ramp";
    case LaneKind::kAccelerationLane:
      return "acceleration_lane";
  }
  return "mainline";
}

LaneKind lane_kind_from_string(const std::string& text) {
  if (text == "mainline") return LaneKind::kMainline;
  if (text == "ramp") return LaneKind::kRamp;
  if (text == "acceleration_lane") return LaneKind::kAccelerationLane;
  throw std::invalid_argument("unknown lane kind: " + text);
}

void Lane::rebuild_arc_length() {
  try {
    cumulative_s = polyline_arc_lengths(centerline);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("lane '" + id + "': " + e.what());
  }
}

Vec2 Lane::point_at(double s) const { return polyline_point_at(centerline, cumulative_s, s); }

double Lane::heading_at(double s) const {
  return polyline_heading_at(centerline, cumulative_s, s);
}

Pose2D Lane::pose_at(double s) const {
  const Vec2 p = point_at(s);
  return {p.x(), p.y(), heading_at(s)};
}

Lane make_lane(std::string id, LaneKind kind, double width, std::vector<Vec2> centerline) {
  Lane lane;
  lane.id = std::move(id);
  lane.kind = kind;
  lane.width = width;
  lane.centerline = std::move(centerline);
  lane.rebuild_arc_length();
  return lane;
}

FrenetCoord project_to_frenet(const Pose2D& pose, const Lane& lane) {
  if (lane.centerline.size() < 2 || lane.cumulative_s.size() != lane.centerline.size()) {
    throw std::domain_error("project_to_frenet: empty lane '" + lane.id + "'");
  }
  const PolylineProjection proj =
      project_to_polyline(lane.centerline, lane.cumulative_s, pose.position());
  return {proj.s, proj.d};
}

const Lane* LaneGraph::find(const std::string& id) const {
  for (const Lane& lane : lanes) {
    if (lane.id == id) {
      return &lane;
    }
  }
  return nullptr;
}

const Lane& LaneGraph::at(const std::string& id) const {
  const Lane* lane = find(id);
  if (lane == nullptr) {
    throw std::invalid_argument("unknown lane: " + id);
  }
  return *lane;
}

void validate_lane_graph(const LaneGraph& graph) {
  for (const Lane& lane : graph.lanes) {
    if (lane.centerline.size() < 2 || lane.cumulative_s.size() != lane.centerline.size()) {
      throw std::invalid_argument("lane '" + lane.id + "': invalid centerline");
    }
    for (std::size_t i = 1; i < lane.cumulative_s.size(); ++i) {
      if (!(lane.cumulative_s[i] > lane.cumulative_s[i - 1])) {
        throw std::invalid_argument("lane '" + lane.id + "': arc length not strictly increasing");
      }
    }
    if (!(lane.width > 0.0)) {
      throw std::invalid_argument("lane '" + lane.id + "': width must be positive");
    }
  }
  for (const auto& [from, to_list] : graph.successors) {
    if (graph.find(from) == nullptr) {
      throw std::invalid_argument("successors reference unknown lane: " + from);
    }
    for (const std::string& to : to_list) {
      if (graph.find(to) == nullptr) {
        throw std::invalid_argument("successors reference unknown lane: " + to);
      }
    }
  }
}

LaneGraph lane_graph_from_json_text(const std::string& text) {
  const json doc = json::parse(text);
  LaneGraph graph;
  for (const json& jlane : doc.at("lanes")) {
    Lane lane;
    lane.id = jlane.at("id").get<std::string>();
    lane.kind = lane_kind_from_string(jlane.value("kind", std::string("mainline")));
    lane.width = jlane.value("width", 3.6);
    for (const json& pt : jlane.at("centerline")) {
      lane.centerline.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
    }
    lane.rebuild_arc_length();
    graph.lanes.push_back(std::move(lane));
  }
  if (doc.contains("successors")) {
    for (const auto& [from, to_list] : doc.at("successors").items()) {
      for (const json& to : to_list) {
        graph.successors[from].push_back(to.get<std::string>());
      }
    }
  }
  if (doc.contains("merge_end_s")) {
    graph.merge_end_s = doc.at("merge_end_s").get<double>();
  }
  validate_lane_graph(graph);
  return graph;
}

std::string lane_graph_to_json_text(const LaneGraph& graph) {
  json doc;
  doc["lanes"] = json::array();
  for (const Lane& lane : graph.lanes) {
    json jlane;
    jlane["id"] = lane.id;
    jlane["kind"] = to_string(lane.kind);
    jlane["width"] = lane.width;
    json pts = json::array();
    for (const Vec2& p : lane.centerline) {
      pts.push_back({p.x(), p.y()});
    }
    jlane["centerline"] = std::move(pts);
    doc["lanes"].push_back(std::move(jlane));
  }
  json succ = json::object();
  for (const auto& [from, to_list] : graph.successors) {
    succ[from] = to_list;
  }
  doc["successors"] = std::move(succ);
  if (graph.merge_end_s) {
    doc["merge_end_s"] = *graph.merge_end_s;
  }
  return doc.dump(2);
}

LaneGraph load_lane_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open map file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return lane_graph_from_json_text(buffer.str());
  } catch (const json::exception& e) {
    throw std::runtime_error("map file " + path + ": " + e.what());
  }
}

}  // namespace coopsim
