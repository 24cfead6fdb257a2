// Copyright 2026 The btforge Authors
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

#include "btforge/metrics/aggregate.hpp"

#include <algorithm>
#include <cmath>

namespace btforge::metrics {

SuiteResult aggregate_suite(const std::vector<std::vector<bool>>& outcomes,
                            const std::vector<bool>& first_attempt_valid) {
  if (outcomes.empty()) throw AggregateError("EmptyInput: no task outcomes");
  if (first_attempt_valid.size() != outcomes.size()) {
    throw AggregateError("validity flags must match the task count");
  }
  size_t k = outcomes.front().size();
  if (k == 0) throw AggregateError("EmptyInput: zero attempts per task");
  for (const auto& attempts : outcomes) {
    if (attempts.size() != k) {
      throw AggregateError("RaggedAttempts: attempt counts differ across tasks");
    }
  }

  SuiteResult result;
  result.task_count = outcomes.size();
  result.attempts = static_cast<int>(k);
  result.outcomes = outcomes;

  size_t first_success = 0;
  size_t any_success = 0;
  size_t valid = 0;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].front()) ++first_success;
    if (std::any_of(outcomes[i].begin(), outcomes[i].end(),
                    [](bool ok) { return ok; })) {
      ++any_success;
    }
    if (first_attempt_valid[i]) ++valid;
  }
  double n = static_cast<double>(outcomes.size());
  result.sr = static_cast<double>(first_success) / n;
  result.pass_at_k = static_cast<double>(any_success) / n;
  result.bt_valid_rate = static_cast<double>(valid) / n;
  return result;
}

MeanStd mean_std(const std::vector<double>& values) {
  if (values.empty()) throw AggregateError("EmptyInput: no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  double mean = sum / static_cast<double>(values.size());
  double variance = 0.0;
  for (double v : values) variance += (v - mean) * (v - mean);
  variance /= static_cast<double>(values.size());
  return {mean, std::sqrt(variance)};
}

}  // namespace btforge::metrics
