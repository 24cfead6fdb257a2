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

#ifndef BTFORGE_METRICS_TREE_METRICS_HPP_
#define BTFORGE_METRICS_TREE_METRICS_HPP_

#include "btforge/bt/tree.hpp"

namespace btforge::metrics {

// 1 iff the decorator-tag sets of the two trees are exactly equal.
int struct_match(const bt::BehaviorTree& generated,
                 const bt::BehaviorTree& reference);

// |A(o) ∩ A(g)| / |A(o) ∪ A(g)| over distinct action primitives.
// Two empty action sets score 1.0.
double action_jaccard(const bt::BehaviorTree& generated,
                      const bt::BehaviorTree& reference);

}  // namespace btforge::metrics

#endif  // BTFORGE_METRICS_TREE_METRICS_HPP_
