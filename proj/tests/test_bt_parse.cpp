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

#include "btforge/bt/parse.hpp"
#include "test_helpers.hpp"

using namespace btforge;
using bt::ParseError;
using bt::ParseErrorCode;

namespace {

ParseErrorCode code_of(const std::string& text) {
  try {
    bt::parse_xml(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  throw std::runtime_error("expected ParseError");
}

}  // namespace

TEST_SUITE("bt_parse") {

TEST_CASE("teapot figure parses to one sequence of four actions") {
  bt::BehaviorTree tree = bt::parse_xml(testing::teapot_xml());
  CHECK(tree.main_tree_id == "MainTree");
  REQUIRE(tree.trees.size() == 1);
  const bt::BtNode& root = tree.main_tree();
  CHECK(root.kind == bt::NodeKind::Sequence);
  REQUIRE(root.children.size() == 4);
  CHECK(root.children[0].id == "NAVIGATE_TO");
  CHECK(root.children[1].id == "GRASP");
  CHECK(root.children[2].id == "NAVIGATE_TO");
  CHECK(root.children[3].id == "PLACE_ON_TOP");
  CHECK(*root.children[1].find_attribute("obj") == "teapot");
  CHECK(*root.children[3].find_attribute("obj") == "stove");
}

TEST_CASE("comments are accepted, dialect structure enforced") {
  bt::BehaviorTree tree = bt::parse_xml(
      "<root main_tree_to_execute=\"T\">\n"
      "  <BehaviorTree ID=\"T\">\n"
      "    <Sequence>\n"
      "      <Action ID=\"NAVIGATE_TO\" obj=\"can_of_soda_1\"/>\n"
      "      <!-- repeat for can_of_soda_2 and can_of_soda_3 -->\n"
      "    </Sequence>\n"
      "  </BehaviorTree>\n"
      "</root>\n");
  CHECK(tree.main_tree().children.size() == 1);
}

TEST_CASE("decorators carry their parameters") {
  bt::BehaviorTree tree = bt::parse_xml(
      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
           <Sequence>
             <RetryUntilSuccessful num_attempts="3">
               <Action ID="GRASP" obj="mug"/>
             </RetryUntilSuccessful>
             <Timeout msec="5000"><Action ID="OPEN" obj="door"/></Timeout>
           </Sequence>
         </BehaviorTree></root>)");
  const bt::BtNode& seq = tree.main_tree();
  CHECK(seq.children[0].kind == bt::NodeKind::RetryUntilSuccessful);
  CHECK(seq.children[0].num_attempts == 3);
  CHECK(seq.children[1].kind == bt::NodeKind::Timeout);
  CHECK(seq.children[1].timeout_msec == 5000);
}

TEST_CASE("subtrees resolve and keep remap attributes") {
  bt::BehaviorTree tree = bt::parse_xml(
      R"(<root main_tree_to_execute="Main">
           <BehaviorTree ID="Main">
             <Sequence><SubTree ID="Fetch" target="mug"/></Sequence>
           </BehaviorTree>
           <BehaviorTree ID="Fetch">
             <Action ID="GRASP" obj="mug"/>
           </BehaviorTree>
         </root>)");
  const bt::BtNode& sub = tree.main_tree().children[0];
  CHECK(sub.kind == bt::NodeKind::SubTree);
  CHECK(sub.id == "Fetch");
  CHECK(*sub.find_attribute("target") == "mug");
  CHECK(tree.find_tree("Fetch") != nullptr);
}

TEST_CASE("error taxonomy") {
  // Not well-formed at all: a truncated generation where the tree closes early.
  CHECK(code_of("</Sequence>\n<Action ID=\"NAVIGATE_TO\" obj=\"x\"/>") ==
        ParseErrorCode::MalformedXml);
  CHECK(code_of("") == ParseErrorCode::MalformedXml);
  CHECK(code_of("prose, not xml") == ParseErrorCode::MalformedXml);

  // Well-formed XML outside the dialect.
  CHECK(code_of("<root main_tree_to_execute=\"T\">some prose</root>") ==
        ParseErrorCode::UnexpectedContent);
  CHECK(code_of("<html><body/></html>") == ParseErrorCode::UnknownTag);
  CHECK(code_of("<root><BehaviorTree ID=\"T\"><Sequence><Action ID=\"GRASP\"/>"
                "</Sequence></BehaviorTree></root>") ==
        ParseErrorCode::MissingMainTree);
  CHECK(code_of("<root main_tree_to_execute=\"X\"><BehaviorTree ID=\"T\">"
                "<Action ID=\"GRASP\" obj=\"m\"/></BehaviorTree></root>") ==
        ParseErrorCode::MissingMainTree);

  std::string prefix = "<root main_tree_to_execute=\"T\"><BehaviorTree ID=\"T\">";
  std::string suffix = "</BehaviorTree></root>";
  CHECK(code_of(prefix + "<Widget/>" + suffix) == ParseErrorCode::UnknownTag);
  CHECK(code_of(prefix + "<Sequence/>" + suffix) == ParseErrorCode::ChildArity);
  CHECK(code_of(prefix + "<Action obj=\"m\"/>" + suffix) ==
        ParseErrorCode::MissingAttribute);
  CHECK(code_of(prefix + "<RetryUntilSuccessful><Action ID=\"GRASP\"/>"
                "</RetryUntilSuccessful>" + suffix) ==
        ParseErrorCode::MissingAttribute);
  CHECK(code_of(prefix + "<RetryUntilSuccessful num_attempts=\"0\">"
                "<Action ID=\"GRASP\"/></RetryUntilSuccessful>" + suffix) ==
        ParseErrorCode::BadAttribute);
  CHECK(code_of(prefix + "<RetryUntilSuccessful num_attempts=\"two\">"
                "<Action ID=\"GRASP\"/></RetryUntilSuccessful>" + suffix) ==
        ParseErrorCode::BadAttribute);
  CHECK(code_of(prefix + "<Timeout msec=\"-1\"><Action ID=\"GRASP\"/>"
                "</Timeout>" + suffix) == ParseErrorCode::BadAttribute);
  CHECK(code_of(prefix + "<Sequence><SubTree ID=\"Nope\"/></Sequence>" +
                suffix) == ParseErrorCode::UnknownTreeReference);

  CHECK(code_of("<root main_tree_to_execute=\"T\">"
                "<BehaviorTree ID=\"T\"><Sequence><Action ID=\"a\"/>"
                "</Sequence></BehaviorTree>"
                "<BehaviorTree ID=\"T\"><Action ID=\"b\"/></BehaviorTree>"
                "</root>") == ParseErrorCode::DuplicateTree);

  // Mutually recursive subtrees.
  CHECK(code_of("<root main_tree_to_execute=\"A\">"
                "<BehaviorTree ID=\"A\"><Sequence><SubTree ID=\"B\"/>"
                "</Sequence></BehaviorTree>"
                "<BehaviorTree ID=\"B\"><Sequence><SubTree ID=\"A\"/>"
                "</Sequence></BehaviorTree>"
                "</root>") == ParseErrorCode::SubTreeCycle);
}

TEST_CASE("unknown attributes on nodes are preserved") {
  bt::BehaviorTree tree = bt::parse_xml(
      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
           <Action ID="PLACE_ON_TOP" obj="stove" item="teapot"/>
         </BehaviorTree></root>)");
  const bt::BtNode& action = tree.main_tree();
  CHECK(*action.find_attribute("item") == "teapot");
}

}  // TEST_SUITE
