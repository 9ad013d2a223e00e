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

#include "coopsim/comm.hpp"
#include "coopsim/lane_graph.hpp"
#include "coopsim/platoon_types.hpp"
#include "coopsim/world.hpp"

namespace coopsim {

enum class MergePolicy { kHeuristic, kGfs };

std::string to_string(MergePolicy policy);
MergePolicy merge_policy_from_string(const std::string& text);

struct PlatoonParams {
  double desired_time_gap{0.6};      // s
  double opened_gap_factor{2.0};     // commanded to the gap opener
  double join_ready_gap_factor{1.5}; // available gap required to start joining
  double lateral_complete_tol{0.3};  // m off the mainline centerline
  double gap_error_complete_tol{0.10};
  double align_tol{2.0};             // m along the mainline
  double slot_block_clearance{5.0};  // m; foreign vehicle this close blocks a slot
  double retry_after_s{4.0};         // blocked-slot dwell before re-requesting
  double response_timeout_s{2.0};
  double abort_margin_factor{1.5};
  MergePolicy policy{MergePolicy::kHeuristic};
};

/// Nominal bumper-to-bumper slot length for a joining vehicle.
double nominal_slot_length(double desired_time_gap, double frontal_speed, double candidate_length);

/// Frontal vehicle selection by shortest Euclidean distance; ties go to the
/// smaller platoon index (closer to the leader).
MergePlan select_merge_position_heuristic(const std::vector<VehicleState>& platoon,
                                          const VehicleState& candidate, const Lane& mainline,
                                          double desired_time_gap);

/// Fuzzy scores for the slot behind each platoon member: inputs are the
/// candidate's distance to the slot, the member's relative speed, and the
/// nearest background vehicle's proximity to the slot.
std::vector<double> gfs_gap_scores(const std::vector<VehicleState>& platoon,
                                   const VehicleState& candidate,
                                   const std::vector<VehicleState>& background,
                                   const Lane& mainline, double desired_time_gap);

/// Mamdani fuzzy selection over the same slot set; highest defuzzified score
/// wins, ties go leader-side.
MergePlan select_merge_position_gfs(const std::vector<VehicleState>& platoon,
                                    const VehicleState& candidate,
                                    const std::vector<VehicleState>& background,
                                    const Lane& mainline, double desired_time_gap);

/// The single GapCommand implied by a merge plan; empty when the plan is a
/// tail join. Throws std::domain_error when the opener is not in the platoon.
std::vector<GapCommandMsg> plan_gap_opening(const std::vector<std::string>& platoon_order,
                                            const MergePlan& plan, double opened_gap_factor);

enum class ManeuverKind { kCruise, kHold, kFollowGap, kLaneChange };

std::string to_string(ManeuverKind kind);

struct ManeuverRequest {
  ManeuverKind kind{ManeuverKind::kCruise};
  std::string lead_id;        // vehicle to regulate the gap against
  double time_gap{0.6};       // s
};

/// Neighbor knowledge reconstructed from this step's beacons.
struct PlatoonView {
  std::vector<std::string> order;                 // from the leader's beacon
  std::map<std::string, StateBeacon> beacons;     // latest per sender
  std::string leader_id;
};

PlatoonView build_platoon_view(const std::vector<Message>& inbox);

struct FsmInput {
  VehicleState self;  // localization estimate projected onto a state
  std::vector<Message> inbox;
  /// Fused detections that match no platoon participant (world frame).
  std::vector<OrientedBox> foreign_obstacles;
  double time{0.0};
  const Lane* mainline{nullptr};
  std::optional<double> merge_end_s;
};

struct FsmOutput {
  FsmState state{FsmState::kMaintaining};
  ManeuverRequest maneuver;
  std::vector<MessagePayload> outbox;
};

/// Per-agent platooning state machine.
///
/// Candidate path: Searching -> JoinRequested -> MovingToPosition ->
/// Joining -> Complete, monotone, with Abort reachable from every
/// non-Complete state (deadline or protocol error). Members toggle
/// Maintaining <-> OpeningGap on GapCommands; the leader stays Leading and
/// answers JoinRequests with a plan from the configured merge policy.
/// Transitions are pure in (state, inbox, scene), so identical inputs give
/// identical outputs.
class PlatoonFsm {
 public:
  PlatoonFsm() = default;
  PlatoonFsm(std::string agent_id, PlatoonRole role, PlatoonParams params,
             std::vector<std::string> initial_order = {});

  FsmOutput step(const FsmInput& input);

  FsmState state() const { return state_; }
  PlatoonRole role() const { return role_; }
  const std::vector<std::string>& platoon_order() const { return order_; }
  double commanded_gap_factor() const { return gap_factor_; }
  const std::optional<MergePlan>& plan() const { return plan_; }

 private:
  FsmOutput step_leader(const FsmInput& input, const PlatoonView& view);
  FsmOutput step_member(const FsmInput& input, const PlatoonView& view);
  FsmOutput step_candidate(const FsmInput& input, const PlatoonView& view);

  std::string id_;
  PlatoonRole role_{PlatoonRole::kMember};
  PlatoonParams params_{};
  FsmState state_{FsmState::kMaintaining};
  std::vector<std::string> order_;  // leader only
  std::optional<MergePlan> plan_;
  double gap_factor_{1.0};
  double last_request_time_{-1.0};
  double abort_deadline_{0.0};
  bool deadline_set_{false};
  double blocked_since_{-1.0};
  std::vector<std::string> excluded_frontals_;
};

}  // namespace coopsim
