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

#ifndef BTFORGE_METRICS_AGGREGATE_HPP_
#define BTFORGE_METRICS_AGGREGATE_HPP_

#include <stdexcept>
#include <vector>

namespace btforge::metrics {

class AggregateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-pair offline scores; all values in [0, 1], struct_match binary.
struct PairScore {
  int struct_match = 0;
  double action_jaccard = 0.0;
  double bleu = 0.0;
  double rouge_1 = 0.0;
  double rouge_2 = 0.0;
  double rouge_l = 0.0;
  double rouge_lsum = 0.0;
};

struct SuiteResult {
  size_t task_count = 0;
  int attempts = 0;                          // k
  std::vector<std::vector<bool>> outcomes;   // per task, k attempt outcomes
  double bt_valid_rate = 0.0;                // attempt-1 conformance verdicts
  double sr = 0.0;                           // attempt-1 success rate
  double pass_at_k = 0.0;                    // any-attempt success rate
};

// Folds per-task attempt outcomes into SR / Pass@k and the attempt-1
// validity rate. Requires a uniform attempt count across tasks
// (RaggedAttempts) and at least one task (EmptyInput). sr <= pass_at_k
// holds for every input.
SuiteResult aggregate_suite(const std::vector<std::vector<bool>>& outcomes,
                            const std::vector<bool>& first_attempt_valid);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

MeanStd mean_std(const std::vector<double>& values);

}  // namespace btforge::metrics

#endif  // BTFORGE_METRICS_AGGREGATE_HPP_
