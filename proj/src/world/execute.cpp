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

#include "btforge/world/execute.hpp"

namespace btforge::world {

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Action: return "action";
    case StepKind::Condition: return "condition";
    case StepKind::Timeout: return "timeout";
  }
  return "?";
}

namespace {

const std::string& require_attribute(const bt::BtNode& leaf,
                                     const char* name) {
  const std::string* value = leaf.find_attribute(name);
  if (value == nullptr || value->empty()) {
    throw bt::ExecutionError("leaf '" + leaf.id + "' requires attribute '" +
                             name + "'");
  }
  return *value;
}

bool registered(const ObjectRegistry& registry, const std::string& id) {
  return registry.contains(id);
}

}  // namespace

bool eval_condition(const WorldState& state, const ObjectRegistry& registry,
                    const bt::BtNode& leaf) {
  const std::string& name = leaf.id;
  if (name == "HAND_EMPTY") return !state.held.has_value();

  if (name == "IS_INSIDE" || name == "IS_ONTOP" || name == "IS_NEXT_TO") {
    const std::string& obj = require_attribute(leaf, "obj");
    const std::string& ref = require_attribute(leaf, "ref");
    if (!registered(registry, obj) || !registered(registry, ref)) return false;
    if (name == "IS_INSIDE") {
      return state.has_relation(RelationKind::Inside, obj, ref);
    }
    if (name == "IS_ONTOP") {
      return state.has_relation(RelationKind::Ontop, obj, ref);
    }
    return state.has_relation(RelationKind::Nextto, obj, ref) ||
           state.has_relation(RelationKind::Nextto, ref, obj);
  }

  const std::string& obj = require_attribute(leaf, "obj");
  if (name == "IS_OPEN") return state.open_objects.count(obj) != 0;
  if (name == "IS_CLOSED") return state.open_objects.count(obj) == 0;
  if (name == "IS_TOGGLED_ON") return state.toggled_objects.count(obj) != 0;
  if (name == "IS_TOGGLED_OFF") return state.toggled_objects.count(obj) == 0;
  if (name == "IS_NEAR") return state.robot_near == obj;
  if (name == "IS_HELD") return state.held == obj;
  throw bt::ExecutionError("unknown condition '" + name + "'");
}

ExecutionTrace execute(const bt::BehaviorTree& tree, const WorldState& initial,
                       const ObjectRegistry& registry, const GoalSpec& goal) {
  ExecutionTrace trace;
  WorldState state = initial;

  bt::LeafHandler handler = [&](const bt::BtNode& leaf) -> bt::TickStatus {
    if (leaf.kind == bt::NodeKind::Condition) {
      bool value = eval_condition(state, registry, leaf);
      TraceStep step;
      step.kind = StepKind::Condition;
      step.id = leaf.id;
      if (const std::string* obj = leaf.find_attribute("obj")) step.obj = *obj;
      step.outcome = value ? bt::TickStatus::Success : bt::TickStatus::Failure;
      if (!value) step.reason = FailReason::PredicateFalse;
      trace.steps.push_back(std::move(step));
      return value ? bt::TickStatus::Success : bt::TickStatus::Failure;
    }

    const std::string& obj = require_attribute(leaf, "obj");
    ApplyResult result = apply(state, leaf.id, obj, registry);
    TraceStep step;
    step.kind = StepKind::Action;
    step.id = leaf.id;
    step.obj = obj;
    if (result.ok) {
      state = std::move(result.state);
      step.outcome = bt::TickStatus::Success;
    } else {
      step.outcome = bt::TickStatus::Failure;
      step.reason = result.reason;
    }
    trace.steps.push_back(std::move(step));
    return trace.steps.back().outcome;
  };

  bt::TimeoutObserver on_timeout = [&](const bt::BtNode& node) {
    TraceStep step;
    step.kind = StepKind::Timeout;
    step.id = "Timeout";
    step.outcome = bt::TickStatus::Success;
    step.timeout_msec = node.timeout_msec;
    trace.steps.push_back(std::move(step));
  };
  trace.final_status = bt::tick(tree, handler, nullptr, on_timeout);
  trace.final_state = std::move(state);
  trace.goal_satisfied = check_goals(trace.final_state, goal, registry);
  return trace;
}

}  // namespace btforge::world
