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

#include "btforge/bt/analysis.hpp"
#include "btforge/bt/parse.hpp"
#include "btforge/bt/serialize.hpp"
#include "btforge/dataset/augment.hpp"
#include "test_helpers.hpp"

using namespace btforge;
using dataset::AugmentConstruct;
using dataset::derive_allowed_actions;
using dataset::EpisodeRecord;
using dataset::lexical_augment;
using dataset::NoPriorGrasp;
using dataset::structural_augment;
using dataset::SynonymMap;

namespace {

EpisodeRecord teapot_record() {
  EpisodeRecord record;
  record.episode_id = "ep_teapot";
  record.record_id = "ep_teapot";
  record.initial_frame = "frames/ep_teapot.png";
  record.contact_sheet = "sheets/ep_teapot.png";
  record.instruction = "Place the teapot on the stove";
  record.bt_xml =
      bt::serialize(bt::parse_xml(testing::teapot_xml()));
  record.allowed_actions = derive_allowed_actions(record.bt_xml);
  record.scene_analysis = {"teapot", "stove", "Place the teapot on the stove",
                           "Teapot on the countertop.",
                           "Navigate, grasp, move, place."};
  return record;
}

}  // namespace

TEST_SUITE("augment") {

TEST_CASE("allowed actions derive in first-appearance order") {
  CHECK(derive_allowed_actions(testing::teapot_xml()) ==
        std::vector<std::string>{"NAVIGATE_TO", "GRASP", "PLACE_ON_TOP"});

  std::string swapped = testing::teapot_xml();
  size_t pos = swapped.find("GRASP");
  swapped.replace(pos, 5, "GRAB");
  std::vector<std::string> actions = derive_allowed_actions(swapped);
  CHECK(std::find(actions.begin(), actions.end(), "GRAB") != actions.end());
  CHECK(std::find(actions.begin(), actions.end(), "GRASP") == actions.end());

  std::string conditions_only =
      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
           <Condition ID="IS_OPEN" obj="door"/>
         </BehaviorTree></root>)";
  CHECK(derive_allowed_actions(conditions_only).empty());
}

TEST_CASE("retry augmentation on GRASP (index 1)") {
  EpisodeRecord record = teapot_record();
  EpisodeRecord out =
      structural_augment(record, AugmentConstruct::retry(3), 1);
  CHECK(out.structurally_augmented);
  CHECK(out.bt_xml ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<root main_tree_to_execute=\"MainTree\">\n"
        "  <BehaviorTree ID=\"MainTree\">\n"
        "    <Sequence>\n"
        "      <Action ID=\"NAVIGATE_TO\" obj=\"teapot\"/>\n"
        "      <RetryUntilSuccessful num_attempts=\"3\">\n"
        "        <Action ID=\"GRASP\" obj=\"teapot\"/>\n"
        "      </RetryUntilSuccessful>\n"
        "      <Action ID=\"NAVIGATE_TO\" obj=\"stove\"/>\n"
        "      <Action ID=\"PLACE_ON_TOP\" obj=\"stove\"/>\n"
        "    </Sequence>\n"
        "  </BehaviorTree>\n"
        "</root>\n");
  CHECK(out.instruction ==
        "Place the teapot on the stove Retry up to 3 times if GRASP teapot "
        "fails.");
  CHECK(bt::extract_decorator_set(bt::parse_xml(out.bt_xml)) ==
        std::set<std::string>{"RetryUntilSuccessful"});
  // The original record is untouched.
  CHECK_FALSE(record.structurally_augmented);
}

TEST_CASE("timeout augmentation records the budget clause") {
  EpisodeRecord out = structural_augment(teapot_record(),
                                         AugmentConstruct::timeout(5000), 3);
  CHECK(out.bt_xml.find("<Timeout msec=\"5000\">") != std::string::npos);
  CHECK(out.instruction.find(
            "Allow at most 5000 milliseconds for PLACE_ON_TOP stove.") !=
        std::string::npos);
  CHECK(bt::extract_decorator_set(bt::parse_xml(out.bt_xml)) ==
        std::set<std::string>{"Timeout"});
}

TEST_CASE("fallback augmentation adds a re-navigate recovery branch") {
  EpisodeRecord out =
      structural_augment(teapot_record(), AugmentConstruct::fallback(), 1);
  CHECK(out.bt_xml ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<root main_tree_to_execute=\"MainTree\">\n"
        "  <BehaviorTree ID=\"MainTree\">\n"
        "    <Sequence>\n"
        "      <Action ID=\"NAVIGATE_TO\" obj=\"teapot\"/>\n"
        "      <Fallback>\n"
        "        <Action ID=\"GRASP\" obj=\"teapot\"/>\n"
        "        <Sequence>\n"
        "          <Action ID=\"NAVIGATE_TO\" obj=\"teapot\"/>\n"
        "          <Action ID=\"GRASP\" obj=\"teapot\"/>\n"
        "        </Sequence>\n"
        "      </Fallback>\n"
        "      <Action ID=\"NAVIGATE_TO\" obj=\"stove\"/>\n"
        "      <Action ID=\"PLACE_ON_TOP\" obj=\"stove\"/>\n"
        "    </Sequence>\n"
        "  </BehaviorTree>\n"
        "</root>\n");
  CHECK(out.instruction.find("If GRASP teapot fails, navigate to teapot "
                             "again and retry it.") != std::string::npos);
}

TEST_CASE("structural augmentation always changes the decorator set") {
  testing::RandomTreeGenerator gen(61);
  util::Rng rng(62);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    bt::BehaviorTree tree = gen.tree(8);
    size_t actions = bt::action_sequence(tree).size();
    if (actions == 0) continue;
    EpisodeRecord record = teapot_record();
    record.bt_xml = bt::serialize(tree);
    record.allowed_actions = derive_allowed_actions(record.bt_xml);

    AugmentConstruct construct;
    switch (rng.index(3)) {
      case 0: construct = AugmentConstruct::retry(2); break;
      case 1: construct = AugmentConstruct::timeout(1000); break;
      default: construct = AugmentConstruct::fallback(); break;
    }
    // Skip cases where the construct tag is already present.
    std::set<std::string> before =
        bt::extract_decorator_set(bt::parse_xml(record.bt_xml));
    const char* tag = construct.kind == AugmentConstruct::Kind::Retry
                          ? "RetryUntilSuccessful"
                          : construct.kind == AugmentConstruct::Kind::Timeout
                                ? "Timeout"
                                : "Fallback";
    if (before.count(tag) != 0) continue;

    EpisodeRecord out =
        structural_augment(record, construct, rng.index(actions));
    std::set<std::string> after =
        bt::extract_decorator_set(bt::parse_xml(out.bt_xml));
    CHECK(after != before);
    CHECK(after.count(tag) == 1);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("augmented records keep the consistency invariant") {
  EpisodeRecord out =
      structural_augment(teapot_record(), AugmentConstruct::fallback(), 3);
  std::set<std::string> used =
      bt::extract_action_set(bt::parse_xml(out.bt_xml));
  std::set<std::string> allowed(out.allowed_actions.begin(),
                                out.allowed_actions.end());
  for (const std::string& action : used) CHECK(allowed.count(action) == 1);
}

TEST_CASE("bad targets are rejected") {
  CHECK_THROWS_AS(
      structural_augment(teapot_record(), AugmentConstruct::retry(3), 4),
      dataset::AugmentError);
  CHECK_THROWS_AS(
      structural_augment(teapot_record(), AugmentConstruct::retry(0), 0),
      dataset::AugmentError);
}

TEST_CASE("synonym map membership is checked against the library") {
  auto library = conformance::PrimitiveLibrary::default_library();
  CHECK_NOTHROW(SynonymMap::parse("GRASP GRAB PICK\n", library));
  CHECK_THROWS_AS(SynonymMap::parse("GRASP STACK\n", library),
                  dataset::AugmentError);
  CHECK_THROWS_AS(SynonymMap::parse("GRASP\n", library),
                  dataset::AugmentError);
  CHECK_THROWS_AS(SynonymMap::parse("GRASP GRAB\nGRAB PICK\n", library),
                  dataset::AugmentError);
  SynonymMap bundled =
      SynonymMap::load(testing::data_dir() / "synonyms.cfg", library);
  REQUIRE(bundled.group_of("GRASP") != nullptr);
  CHECK(bundled.group_of("GRASP")->size() == 3);
}

TEST_CASE("probability zero is the identity") {
  EpisodeRecord record = teapot_record();
  EpisodeRecord out =
      lexical_augment(record, SynonymMap::default_map(), 0.0, 1234);
  CHECK(out == record);
  CHECK(dataset::record_to_json(out) == dataset::record_to_json(record));
}

TEST_CASE("probability one swaps every occurrence and adds item attributes") {
  // A single-option group pins the replacement choice.
  auto library = conformance::PrimitiveLibrary::default_library();
  SynonymMap map = SynonymMap::parse("GRASP GRAB\n", library);
  EpisodeRecord out = lexical_augment(teapot_record(), map, 1.0, 7);
  CHECK(out.lexically_augmented);
  CHECK(out.bt_xml ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<root main_tree_to_execute=\"MainTree\">\n"
        "  <BehaviorTree ID=\"MainTree\">\n"
        "    <Sequence>\n"
        "      <Action ID=\"NAVIGATE_TO\" obj=\"teapot\"/>\n"
        "      <Action ID=\"GRAB\" obj=\"teapot\"/>\n"
        "      <Action ID=\"NAVIGATE_TO\" obj=\"stove\"/>\n"
        "      <Action ID=\"PLACE_ON_TOP\" item=\"teapot\" obj=\"stove\"/>\n"
        "    </Sequence>\n"
        "  </BehaviorTree>\n"
        "</root>\n");
  CHECK(out.allowed_actions ==
        std::vector<std::string>{"NAVIGATE_TO", "GRAB", "PLACE_ON_TOP"});
}

TEST_CASE("the explicit object tracks the most recent grasp") {
  std::string two_pick =
      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
           <Sequence>
             <Action ID="NAVIGATE_TO" obj="mug"/>
             <Action ID="GRASP" obj="mug"/>
             <Action ID="NAVIGATE_TO" obj="shelf"/>
             <Action ID="PLACE_ON_TOP" obj="shelf"/>
             <Action ID="NAVIGATE_TO" obj="plate"/>
             <Action ID="GRASP" obj="plate"/>
             <Action ID="NAVIGATE_TO" obj="shelf"/>
             <Action ID="PLACE_ON_TOP" obj="shelf"/>
           </Sequence>
         </BehaviorTree></root>)";
  EpisodeRecord record = teapot_record();
  record.bt_xml = bt::serialize(bt::parse_xml(two_pick));
  record.allowed_actions = derive_allowed_actions(record.bt_xml);
  // Empty synonym map isolates the explicit-object pass.
  SynonymMap none;
  EpisodeRecord out = lexical_augment(record, none, 1.0, 3);
  bt::BehaviorTree tree = bt::parse_xml(out.bt_xml);
  std::vector<const bt::BtNode*> placements;
  auto collect = [&](auto&& self, const bt::BtNode& node) -> void {
    if (node.kind == bt::NodeKind::Action && node.id == "PLACE_ON_TOP") {
      placements.push_back(&node);
    }
    for (const bt::BtNode& child : node.children) self(self, child);
  };
  collect(collect, tree.main_tree());
  REQUIRE(placements.size() == 2);
  CHECK(*placements[0]->find_attribute("item") == "mug");
  CHECK(*placements[1]->find_attribute("item") == "plate");
}

TEST_CASE("explicit object before any grasp raises NoPriorGrasp") {
  std::string place_first =
      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
           <Sequence>
             <Action ID="NAVIGATE_TO" obj="shelf"/>
             <Action ID="PLACE_ON_TOP" obj="shelf"/>
           </Sequence>
         </BehaviorTree></root>)";
  EpisodeRecord record = teapot_record();
  record.bt_xml = bt::serialize(bt::parse_xml(place_first));
  record.allowed_actions = derive_allowed_actions(record.bt_xml);
  SynonymMap none;
  CHECK_THROWS_AS(lexical_augment(record, none, 1.0, 3), NoPriorGrasp);
}

TEST_CASE("lexical augmentation is deterministic per seed") {
  SynonymMap map = SynonymMap::default_map();
  EpisodeRecord record = teapot_record();
  EpisodeRecord a = lexical_augment(record, map, 0.5, 99);
  EpisodeRecord b = lexical_augment(record, map, 0.5, 99);
  CHECK(a == b);
}

}  // TEST_SUITE
