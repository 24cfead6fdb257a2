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

#include "btforge/metrics/tree_metrics.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "btforge/bt/analysis.hpp"

namespace btforge::metrics {

int struct_match(const bt::BehaviorTree& generated,
                 const bt::BehaviorTree& reference) {
  return bt::extract_decorator_set(generated) ==
                 bt::extract_decorator_set(reference)
             ? 1
             : 0;
}

double action_jaccard(const bt::BehaviorTree& generated,
                      const bt::BehaviorTree& reference) {
  std::set<std::string> a = bt::extract_action_set(generated);
  std::set<std::string> b = bt::extract_action_set(reference);
  if (a.empty() && b.empty()) return 1.0;

  std::set<std::string> intersection;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(intersection, intersection.begin()));
  size_t union_size = a.size() + b.size() - intersection.size();
  return static_cast<double>(intersection.size()) /
         static_cast<double>(union_size);
}

}  // namespace btforge::metrics
