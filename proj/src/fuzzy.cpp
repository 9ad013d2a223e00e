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

#include "coopsim/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace coopsim {

double TriangularSet::membership(double x) const {
  if (x < a || x > c) {
    return 0.0;
  }
  if (x == b) {
    return 1.0;
  }
  if (x < b) {
    return a == b ? 1.0 : (x - a) / (b - a);
  }
  return b == c ? 1.0 : (c - x) / (c - b);
}

MamdaniEngine::MamdaniEngine(std::vector<std::vector<TriangularSet>> input_sets,
                             std::vector<TriangularSet> output_sets, std::vector<FuzzyRule> rules,
                             double output_lo, double output_hi, int output_samples)
    : input_sets_(std::move(input_sets)),
      output_sets_(std::move(output_sets)),
      rules_(std::move(rules)),
      output_lo_(output_lo),
      output_hi_(output_hi),
      output_samples_(output_samples) {
  if (output_samples_ < 2 || !(output_hi_ > output_lo_)) {
    throw std::invalid_argument("MamdaniEngine: bad output domain");
  }
  for (const FuzzyRule& rule : rules_) {
    if (rule.output_set >= output_sets_.size()) {
      throw std::invalid_argument("MamdaniEngine: rule output set out of range");
    }
    for (const FuzzyClause& clause : rule.antecedents) {
      if (clause.variable >= input_sets_.size() ||
          clause.set >= input_sets_[clause.variable].size()) {
        throw std::invalid_argument("MamdaniEngine: rule antecedent out of range");
      }
    }
  }
}

double MamdaniEngine::rule_strength(const FuzzyRule& rule,
                                    const std::vector<double>& inputs) const {
  double strength = 1.0;
  for (const FuzzyClause& clause : rule.antecedents) {
    strength = std::min(strength,
                        input_sets_[clause.variable][clause.set].membership(inputs[clause.variable]));
  }
  return strength;
}

double MamdaniEngine::evaluate(const std::vector<double>& inputs) const {
  if (inputs.size() != input_sets_.size()) {
    throw std::invalid_argument("MamdaniEngine: wrong input count");
  }
  std::vector<double> strengths(output_sets_.size(), 0.0);
  for (const FuzzyRule& rule : rules_) {
    strengths[rule.output_set] = std::max(strengths[rule.output_set], rule_strength(rule, inputs));
  }
  // Centroid of the clipped-and-maxed aggregate membership.
  double weighted = 0.0;
  double total = 0.0;
  const double step = (output_hi_ - output_lo_) / (output_samples_ - 1);
  for (int i = 0; i < output_samples_; ++i) {
    const double z = output_lo_ + step * i;
    double mu = 0.0;
    for (std::size_t k = 0; k < output_sets_.size(); ++k) {
      mu = std::max(mu, std::min(strengths[k], output_sets_[k].membership(z)));
    }
    weighted += mu * z;
    total += mu;
  }
  if (total == 0.0) {
    return 0.5 * (output_lo_ + output_hi_);
  }
  return weighted / total;
}

}  // namespace coopsim
