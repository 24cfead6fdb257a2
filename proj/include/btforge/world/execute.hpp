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

#ifndef BTFORGE_WORLD_EXECUTE_HPP_
#define BTFORGE_WORLD_EXECUTE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "btforge/bt/tick.hpp"
#include "btforge/bt/tree.hpp"
#include "btforge/world/apply.hpp"
#include "btforge/world/world.hpp"

namespace btforge::world {

enum class StepKind { Action, Condition, Timeout };
const char* step_kind_name(StepKind kind);

struct TraceStep {
  StepKind kind = StepKind::Action;
  std::string id;   // primitive / condition name; "Timeout" for budgets
  std::string obj;  // target object ("" when absent)
  bt::TickStatus outcome = bt::TickStatus::Success;
  std::optional<FailReason> reason;  // set when outcome is Failure
  long long timeout_msec = 0;        // StepKind::Timeout only
};

struct ExecutionTrace {
  std::vector<TraceStep> steps;
  bt::TickStatus final_status = bt::TickStatus::Failure;
  WorldState final_state;
  bool goal_satisfied = false;
};

// Runs the tree against a copy of `initial`. Action leaves apply their
// primitive; a precondition failure is recorded as a failed step, not an
// exception. Condition leaves evaluate their predicate against the current
// state. Malformed leaves (missing obj, unknown condition name) raise
// bt::ExecutionError. goal_satisfied is computed from the final state only.
ExecutionTrace execute(const bt::BehaviorTree& tree, const WorldState& initial,
                       const ObjectRegistry& registry, const GoalSpec& goal);

// Condition vocabulary: IS_OPEN, IS_CLOSED, IS_TOGGLED_ON, IS_TOGGLED_OFF,
// IS_NEAR, IS_HELD, HAND_EMPTY (no obj), IS_INSIDE/IS_ONTOP/IS_NEXT_TO
// (obj + ref attributes). Throws bt::ExecutionError for names outside the
// vocabulary or missing attributes.
bool eval_condition(const WorldState& state, const ObjectRegistry& registry,
                    const bt::BtNode& leaf);

}  // namespace btforge::world

#endif  // BTFORGE_WORLD_EXECUTE_HPP_
