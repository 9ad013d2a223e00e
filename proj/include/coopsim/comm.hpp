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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "coopsim/perception.hpp"
#include "coopsim/platoon_types.hpp"
#include "coopsim/rng.hpp"
#include "coopsim/world.hpp"

namespace coopsim {

struct CommConfig {
  double range{70.0};  // m, inclusive at the boundary
  int latency_steps{0};
  double drop_p{0.0};
};

/// Periodic state broadcast. The leader's beacon also carries the platoon
/// order so members and candidates can resolve their predecessors.
struct StateBeacon {
  Pose2D pose;
  double speed{0.0};
  double accel{0.0};
  double length{4.5};
  FsmState fsm{FsmState::kMaintaining};
  std::vector<std::string> platoon_order;
};

struct JoinRequestMsg {
  std::string candidate_id;
  /// Frontal vehicles the candidate found blocked; the leader skips them on
  /// re-planning.
  std::vector<std::string> excluded_frontals;
};

struct JoinResponseMsg {
  std::string candidate_id;
  bool accepted{true};
  MergePlan plan;
};

struct GapCommandMsg {
  std::string target_member;
  double time_gap_factor{2.0};  // multiple of the platoon's desired time gap
};

struct SharedDetectionsMsg {
  std::vector<Detection> detections;  // in the sender's frame
};

struct SharedHitsMsg {
  HitRecord hits;
};

enum class MessageKind {
  kStateBeacon,
  kJoinRequest,
  kJoinResponse,
  kGapCommand,
  kSharedDetections,
  kSharedHits,
};

std::string to_string(MessageKind kind);
MessageKind message_kind_from_string(const std::string& text);

using MessagePayload = std::variant<StateBeacon, JoinRequestMsg, JoinResponseMsg, GapCommandMsg,
                                    SharedDetectionsMsg, SharedHitsMsg>;

struct Message {
  std::string sender;
  std::int64_t sent_at{0};
  Pose2D sender_pose_at_send;
  MessagePayload payload;

  MessageKind kind() const { return static_cast<MessageKind>(payload.index()); }
};

/// Range-limited broadcast bus with whole-step latency and i.i.d. loss.
/// Delivery eligibility is fixed by the sender pose at send time; receivers
/// see messages exactly at step sent_at + latency_steps, ordered by
/// (sender, sent_at).
class MessageBus {
 public:
  explicit MessageBus(const CommConfig& config) : config_(config) {}

  /// Queues a message; sent_at must be non-negative.
  void publish(Message msg);

  /// Messages due at `step` for this receiver, range-filtered against the
  /// sender pose at send time and independently dropped with drop_p.
  std::vector<Message> collect(const std::string& receiver, const Pose2D& receiver_pose,
                               std::int64_t step, RngStream& rng) const;

  /// Discards messages that can no longer be delivered at or after `step`.
  void prune(std::int64_t step);

  const CommConfig& config() const { return config_; }
  std::size_t pending() const { return queue_.size(); }

 private:
  CommConfig config_;
  std::vector<Message> queue_;
};

}  // namespace coopsim
