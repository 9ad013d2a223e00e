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

#include "coopsim/comm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopsim {

std::string to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::kStateBeacon:
      return "StateBeacon";
    case MessageKind::kJoinRequest:
      return "JoinRequest";
    case MessageKind::kJoinResponse:
      return "JoinResponse";
    case MessageKind::kGapCommand:
      return "GapCommand";
    case MessageKind::kSharedDetections:
      return "SharedDetections";
    case MessageKind::kSharedHits:
      return "SharedHits";
  }
  return "StateBeacon";
}

MessageKind message_kind_from_string(const std::string& text) {
  if (text == "StateBeacon") return MessageKind::kStateBeacon;
  if (text == "JoinRequest") return MessageKind::kJoinRequest;
  if (text == "JoinResponse") return MessageKind::kJoinResponse;
  if (text == "GapCommand") return MessageKind::kGapCommand;
  if (text == "SharedDetections") return MessageKind::kSharedDetections;
  if (text == "SharedHits") return MessageKind::kSharedHits;
  throw std::invalid_argument("unknown message kind: " + text);
}

void MessageBus::publish(Message msg) {
  if (msg.sent_at < 0) {
    throw std::invalid_argument("MessageBus::publish: sent_at must be non-negative");
  }
  queue_.push_back(std::move(msg));
}

std::vector<Message> MessageBus::collect(const std::string& receiver, const Pose2D& receiver_pose,
                                         std::int64_t step, RngStream& rng) const {
  std::vector<const Message*> due;
  for (const Message& msg : queue_) {
    if (msg.sent_at + config_.latency_steps != step || msg.sender == receiver) {
      continue;
    }
    const double dist = std::hypot(msg.sender_pose_at_send.x - receiver_pose.x,
                                   msg.sender_pose_at_send.y - receiver_pose.y);
    if (dist > config_.range) {
      continue;
    }
    due.push_back(&msg);
  }
  std::stable_sort(due.begin(), due.end(), [](const Message* a, const Message* b) {
    if (a->sender != b->sender) return a->sender < b->sender;
    return a->sent_at < b->sent_at;
  });
  std::vector<Message> delivered;
  delivered.reserve(due.size());
  for (const Message* msg : due) {
    if (rng.uniform01() < config_.drop_p) {
      continue;
    }
    delivered.push_back(*msg);
  }
  return delivered;
}

void MessageBus::prune(std::int64_t step) {
  std::erase_if(queue_, [&](const Message& msg) {
    return msg.sent_at + config_.latency_steps < step;
  });
}

}  // namespace coopsim
