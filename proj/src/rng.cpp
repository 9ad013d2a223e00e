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

#include "coopsim/rng.hpp"

#include <cmath>

namespace coopsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// FNV-1a, stable across platforms (std::hash is not).
std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) {
    return 0;
  }
  return next_u64() % n;
}

double RngStream::normal() {
  // Box-Muller; u1 kept away from zero so the log is finite.
  constexpr double kTau = 6.28318530717958647692;
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL + fnv1a(label));
  return splitmix64(state);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& label, std::uint64_t index) {
  std::uint64_t state = derive_seed(seed, label) ^ (index * 0xD1B54A32D192ED03ULL + 1);
  return splitmix64(state);
}

}  // namespace coopsim
