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

#ifndef BTFORGE_BT_ANALYSIS_HPP_
#define BTFORGE_BT_ANALYSIS_HPP_

#include <set>
#include <string>
#include <vector>

#include "btforge/bt/tree.hpp"

namespace btforge::bt {

// Vocabulary of structural tags compared by the structural-match metric.
const std::set<std::string>& decorator_vocabulary();

// Distinct Action ids over every defined tree; Condition ids, control and
// decorator tags are excluded, multiplicity is discarded.
std::set<std::string> extract_action_set(const BehaviorTree& tree);

// Same contents as extract_action_set, in first-appearance order
// (document order, pre-order within each tree).
std::vector<std::string> extract_action_list(const BehaviorTree& tree);

// Every Action occurrence in document order, with multiplicity.
std::vector<std::string> action_sequence(const BehaviorTree& tree);

// Subset of the decorator vocabulary actually occurring in the document.
std::set<std::string> extract_decorator_set(const BehaviorTree& tree);

}  // namespace btforge::bt

#endif  // BTFORGE_BT_ANALYSIS_HPP_
