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

#include <cstddef>
#include <vector>

namespace coopsim {

/// Triangular membership with feet a, c and peak b. Inputs are expected to
/// be clamped to the variable's domain, so edge sets (a == b or b == c)
/// behave as shoulders.
struct TriangularSet {
  double a{0.0};
  double b{0.5};
  double c{1.0};

  double membership(double x) const;
};

/// Antecedent clause: input `variable` is in `set` (indices into the
/// engine's input variables / their set lists).
struct FuzzyClause {
  std::size_t variable{0};
  std::size_t set{0};
};

struct FuzzyRule {
  std::vector<FuzzyClause> antecedents;  // AND-combined (min)
  std::size_t output_set{0};
};

/// Minimal Mamdani engine: min implication, max aggregation, centroid
/// defuzzification over a sampled output domain.
class MamdaniEngine {
 public:
  MamdaniEngine(std::vector<std::vector<TriangularSet>> input_sets,
                std::vector<TriangularSet> output_sets, std::vector<FuzzyRule> rules,
                double output_lo = 0.0, double output_hi = 1.0, int output_samples = 1001);

  /// Defuzzified output for one crisp input vector.
  double evaluate(const std::vector<double>& inputs) const;

  /// Rule firing strength (for inspection and tests).
  double rule_strength(const FuzzyRule& rule, const std::vector<double>& inputs) const;

 private:
  std::vector<std::vector<TriangularSet>> input_sets_;
  std::vector<TriangularSet> output_sets_;
  std::vector<FuzzyRule> rules_;
  double output_lo_;
  double output_hi_;
  int output_samples_;
};

}  // namespace coopsim
