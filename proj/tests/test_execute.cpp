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

#include <doctest.h>

#include <thread>

#include "btforge/bt/parse.hpp"
#include "btforge/world/execute.hpp"
#include "btforge/world/task.hpp"
#include "test_helpers.hpp"

using namespace btforge;
using world::FailReason;
using world::StepKind;

namespace {

world::TaskBundle load(const char* name) {
  return world::load_task(testing::data_dir() / "tasks" /
                          (std::string(name) + ".json"));
}

std::string reference_tree(const char* name) {
  return testing::read_file(testing::data_dir() / "trees" /
                            (std::string(name) + ".xml"));
}

}  // namespace

TEST_SUITE("execute") {

TEST_CASE("teapot task succeeds with the reference tree") {
  world::TaskBundle task = load("placing_teapot_on_stove");
  world::ExecutionTrace trace =
      world::execute(bt::parse_xml(reference_tree("placing_teapot_on_stove")),
                     task.initial_state, task.registry, task.goal);
  CHECK(trace.final_status == bt::TickStatus::Success);
  CHECK(trace.goal_satisfied);
  CHECK(trace.steps.size() == 4);
  for (const world::TraceStep& step : trace.steps) {
    CHECK(step.outcome == bt::TickStatus::Success);
  }
}

TEST_CASE("grasp-before-open ordering error fails from step 2 on") {
  world::TaskBundle task = load("carrying_in_groceries");
  // A mis-ordered plan: grab the tomato first, then try to open the
  // fridge with a full gripper.
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Action ID="NAVIGATE_TO" obj="beefsteak_tomato"/>
        <Action ID="GRASP" obj="beefsteak_tomato"/>
        <Action ID="NAVIGATE_TO" obj="electric_refrigerator"/>
        <Action ID="OPEN" obj="electric_refrigerator"/>
        <Action ID="PLACE_INSIDE" obj="electric_refrigerator"/>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  CHECK(trace.final_status == bt::TickStatus::Failure);
  CHECK_FALSE(trace.goal_satisfied);
  REQUIRE(trace.steps.size() == 4);  // sequence stops at the failing OPEN
  CHECK(trace.steps[3].id == "OPEN");
  CHECK(trace.steps[3].reason == FailReason::HandsFull);
}

TEST_CASE("place-inside-before-open fails with CLOSED_CONTAINER") {
  world::TaskBundle task = load("carrying_in_groceries");
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Action ID="NAVIGATE_TO" obj="beefsteak_tomato"/>
        <Action ID="GRASP" obj="beefsteak_tomato"/>
        <Action ID="NAVIGATE_TO" obj="electric_refrigerator"/>
        <Action ID="PLACE_INSIDE" obj="electric_refrigerator"/>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  CHECK_FALSE(trace.goal_satisfied);
  CHECK(trace.steps.back().reason == FailReason::ClosedContainer);
}

TEST_CASE("the groceries reference plan satisfies every predicate") {
  world::TaskBundle task = load("carrying_in_groceries");
  world::ExecutionTrace trace =
      world::execute(bt::parse_xml(reference_tree("carrying_in_groceries")),
                     task.initial_state, task.registry, task.goal);
  CHECK(trace.final_status == bt::TickStatus::Success);
  CHECK(trace.goal_satisfied);
}

TEST_CASE("12-step trash plan moves all three cans") {
  world::TaskBundle task = load("picking_up_trash");
  world::ExecutionTrace trace =
      world::execute(bt::parse_xml(reference_tree("picking_up_trash")),
                     task.initial_state, task.registry, task.goal);
  CHECK(trace.steps.size() == 12);
  CHECK(trace.goal_satisfied);
  for (const char* can : {"can_of_soda_1", "can_of_soda_2", "can_of_soda_3"}) {
    CHECK(trace.final_state.has_relation(world::RelationKind::Inside, can,
                                         "trash_can"));
  }
}

TEST_CASE("no sibling executes after a sequence step fails") {
  world::TaskBundle task = load("placing_teapot_on_stove");
  // GRASP before NAVIGATE_TO: fails at step 1, nothing else runs.
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Action ID="GRASP" obj="teapot"/>
        <Action ID="NAVIGATE_TO" obj="teapot"/>
        <Action ID="NAVIGATE_TO" obj="stove"/>
        <Action ID="PLACE_ON_TOP" obj="stove"/>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].reason == FailReason::NotNear);
  CHECK_FALSE(trace.goal_satisfied);
}

TEST_CASE("condition leaves read the evolving state") {
  world::TaskBundle task = load("outfit_a_basic_toolbox");
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Condition ID="IS_CLOSED" obj="toolbox"/>
        <Action ID="NAVIGATE_TO" obj="toolbox"/>
        <Action ID="OPEN" obj="toolbox"/>
        <Condition ID="IS_OPEN" obj="toolbox"/>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  CHECK(trace.final_status == bt::TickStatus::Success);
  CHECK(trace.steps.size() == 4);
  CHECK(trace.steps[0].kind == StepKind::Condition);
  CHECK(trace.steps[3].kind == StepKind::Condition);
}

TEST_CASE("a false condition is a failed step with PREDICATE_FALSE") {
  world::TaskBundle task = load("outfit_a_basic_toolbox");
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Condition ID="IS_OPEN" obj="toolbox"/>
        <Action ID="NAVIGATE_TO" obj="toolbox"/>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  CHECK(trace.final_status == bt::TickStatus::Failure);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].reason == FailReason::PredicateFalse);
}

TEST_CASE("fallback recovers a failed branch") {
  world::TaskBundle task = load("outfit_a_basic_toolbox");
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Fallback>
          <Condition ID="IS_OPEN" obj="toolbox"/>
          <Sequence>
            <Action ID="NAVIGATE_TO" obj="toolbox"/>
            <Action ID="OPEN" obj="toolbox"/>
          </Sequence>
        </Fallback>
        <Condition ID="IS_OPEN" obj="toolbox"/>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  CHECK(trace.final_status == bt::TickStatus::Success);
}

TEST_CASE("timeout budgets appear in the trace in execution order") {
  world::TaskBundle task = load("placing_teapot_on_stove");
  std::string xml = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Action ID="NAVIGATE_TO" obj="teapot"/>
        <Timeout msec="2500"><Action ID="GRASP" obj="teapot"/></Timeout>
      </Sequence>
    </BehaviorTree></root>)";
  world::ExecutionTrace trace = world::execute(
      bt::parse_xml(xml), task.initial_state, task.registry, task.goal);
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[0].kind == StepKind::Action);
  CHECK(trace.steps[1].kind == StepKind::Timeout);
  CHECK(trace.steps[1].timeout_msec == 2500);
  CHECK(trace.steps[2].id == "GRASP");
}

TEST_CASE("malformed leaves raise ExecutionError") {
  world::TaskBundle task = load("placing_teapot_on_stove");
  std::string no_obj = R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Action ID="GRASP"/>
    </BehaviorTree></root>)";
  CHECK_THROWS_AS(world::execute(bt::parse_xml(no_obj), task.initial_state,
                                 task.registry, task.goal),
                  bt::ExecutionError);
  std::string bad_condition =
      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Condition ID="IS_SPARKLING" obj="teapot"/>
    </BehaviorTree></root>)";
  CHECK_THROWS_AS(world::execute(bt::parse_xml(bad_condition),
                                 task.initial_state, task.registry, task.goal),
                  bt::ExecutionError);
}

TEST_CASE("execution is a pure function of its inputs") {
  world::TaskBundle task = load("carrying_in_groceries");
  bt::BehaviorTree tree =
      bt::parse_xml(reference_tree("carrying_in_groceries"));
  world::ExecutionTrace first =
      world::execute(tree, task.initial_state, task.registry, task.goal);
  world::ExecutionTrace second =
      world::execute(tree, task.initial_state, task.registry, task.goal);
  CHECK(first.goal_satisfied == second.goal_satisfied);
  CHECK(first.final_state == second.final_state);
  REQUIRE(first.steps.size() == second.steps.size());
  for (size_t i = 0; i < first.steps.size(); ++i) {
    CHECK(first.steps[i].id == second.steps[i].id);
    CHECK(first.steps[i].outcome == second.steps[i].outcome);
  }
}

TEST_CASE("independent episodes run safely in parallel") {
  // Trees are immutable after parse and execution owns its state copy, so
  // concurrent runs over the same inputs must agree with a serial run.
  world::TaskBundle task = load("carrying_in_groceries");
  bt::BehaviorTree tree =
      bt::parse_xml(reference_tree("carrying_in_groceries"));
  world::ExecutionTrace serial =
      world::execute(tree, task.initial_state, task.registry, task.goal);

  constexpr int kThreads = 8;
  std::vector<world::ExecutionTrace> traces(kThreads);
  {
    std::vector<std::thread> threads;
    threads.reserve(kThreads);
    for (int t = 0; t < kThreads; ++t) {
      threads.emplace_back([&, t] {
        traces[t] =
            world::execute(tree, task.initial_state, task.registry, task.goal);
      });
    }
    for (std::thread& thread : threads) thread.join();
  }
  for (const world::ExecutionTrace& trace : traces) {
    CHECK(trace.goal_satisfied == serial.goal_satisfied);
    CHECK(trace.final_state == serial.final_state);
    REQUIRE(trace.steps.size() == serial.steps.size());
  }
}

TEST_CASE("every failure reason has a minimal triggering plan") {
  // For each reason code, a crafted initial state and a <= 2-action tree.
  world::ObjectRegistry registry;
  registry.add({.id = "cup"});
  registry.add({.id = "table", .surface = true});
  registry.add({.id = "chest", .openable = true, .container = true});
  registry.add({.id = "rock"});

  auto seq1 = [](const char* a, const char* obj) {
    return "<root main_tree_to_execute=\"T\"><BehaviorTree ID=\"T\">"
           "<Action ID=\"" + std::string(a) + "\" obj=\"" + obj + "\"/>"
           "</BehaviorTree></root>";
  };
  auto seq2 = [](const char* a1, const char* o1, const char* a2,
                 const char* o2) {
    return "<root main_tree_to_execute=\"T\"><BehaviorTree ID=\"T\"><Sequence>"
           "<Action ID=\"" + std::string(a1) + "\" obj=\"" + o1 + "\"/>"
           "<Action ID=\"" + a2 + "\" obj=\"" + o2 + "\"/>"
           "</Sequence></BehaviorTree></root>";
  };

  std::vector<std::pair<FailReason, std::string>> cases;
  cases.emplace_back(FailReason::NotNear, seq1("GRASP", "cup"));
  cases.emplace_back(FailReason::EmptyHand,
                     seq2("NAVIGATE_TO", "table", "PLACE_ON_TOP", "table"));
  cases.emplace_back(FailReason::NotASurface,
                     seq2("NAVIGATE_TO", "rock", "PLACE_ON_TOP", "rock"));
  cases.emplace_back(FailReason::NotAContainer,
                     seq2("NAVIGATE_TO", "table", "PLACE_INSIDE", "table"));
  cases.emplace_back(FailReason::ClosedContainer,
                     seq2("NAVIGATE_TO", "chest", "PLACE_INSIDE", "chest"));
  cases.emplace_back(FailReason::NotOpenable,
                     seq2("NAVIGATE_TO", "rock", "OPEN", "rock"));
  cases.emplace_back(FailReason::NotToggleable,
                     seq2("NAVIGATE_TO", "rock", "TOGGLE_ON", "rock"));
  cases.emplace_back(FailReason::HandsFull,
                     seq2("NAVIGATE_TO", "chest", "OPEN", "chest"));
  cases.emplace_back(FailReason::Occluded,
                     seq2("NAVIGATE_TO", "cup", "GRASP", "cup"));

  for (const auto& [reason, xml] : cases) {
    world::WorldState state;
    if (reason == FailReason::EmptyHand) {
      // nothing held
    } else if (reason == FailReason::HandsFull) {
      state.held = "cup";
    } else if (reason == FailReason::Occluded) {
      state.relations.insert({world::RelationKind::Inside, "cup", "chest"});
    } else if (reason == FailReason::NotASurface ||
               reason == FailReason::NotAContainer ||
               reason == FailReason::ClosedContainer) {
      state.held = "cup";
    }
    world::ExecutionTrace trace = world::execute(
        bt::parse_xml(xml), state, registry, world::GoalSpec{});
    REQUIRE_MESSAGE(!trace.steps.empty(), world::fail_reason_code(reason));
    CHECK_MESSAGE(trace.steps.back().reason == reason,
                  world::fail_reason_code(reason));
  }
}

}  // TEST_SUITE
