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

#include <string>

namespace coopsim {

enum class PlatoonRole { kLeader, kMember, kCandidate };

enum class FsmState {
  kMaintaining,
  kLeading,
  kSearching,
  kJoinRequested,
  kMovingToPosition,
  kOpeningGap,
  kJoining,
  kComplete,
  kAbort,
};

std::string to_string(FsmState state);
FsmState fsm_state_from_string(const std::string& text);

/// Leader-side merge decision: the candidate slots in directly behind the
/// frontal vehicle; the member that was following it (if any) opens the gap.
struct MergePlan {
  std::string frontal_vehicle;
  std::string gap_opener;  // empty for a tail join
  double target_s{0.0};    // mainline arc length of the slot center
};

}  // namespace coopsim
