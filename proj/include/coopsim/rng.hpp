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

namespace coopsim {

/// Counter-based pseudo-random stream (splitmix64). Self-contained so that
/// identically seeded runs draw identical sequences on every platform; the
/// standard-library distributions do not give that guarantee.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal via Box-Muller (two uniforms per draw, no caching).
  double normal();

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::uint64_t state_;
};

/// Stable sub-seed derivation: the same (seed, labels...) always yields the
/// same stream regardless of construction order.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& label);
std::uint64_t derive_seed(std::uint64_t seed, const std::string& label, std::uint64_t index);

inline RngStream derive_stream(std::uint64_t seed, const std::string& label) {
  return RngStream(derive_seed(seed, label));
}

}  // namespace coopsim
