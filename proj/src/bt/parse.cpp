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

#include "btforge/bt/parse.hpp"

#include <charconv>
#include <set>

#include "btforge/xml/dom.hpp"

namespace btforge::bt {

namespace {

[[noreturn]] void fail(ParseErrorCode code, const std::string& msg) {
  throw ParseError(code, msg);
}

long long parse_integer(const std::string& value, const char* attr,
                        const std::string& tag) {
  long long out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    fail(ParseErrorCode::BadAttribute,
         tag + " attribute " + attr + "=\"" + value + "\" is not an integer");
  }
  return out;
}

BtNode map_node(const xml::Element& elem) {
  auto kind = node_kind_from_tag(elem.name);
  if (!kind) {
    fail(ParseErrorCode::UnknownTag,
         "unknown element <" + elem.name + "> at line " +
             std::to_string(elem.line));
  }
  if (elem.has_non_whitespace_text()) {
    fail(ParseErrorCode::UnexpectedContent,
         "<" + elem.name + "> contains character data");
  }

  BtNode node;
  node.kind = *kind;
  for (const auto& [name, value] : elem.attributes) {
    if (name == "ID" && (is_leaf(node.kind) || node.kind == NodeKind::SubTree)) {
      node.id = value;
    } else if (name == "num_attempts" &&
               node.kind == NodeKind::RetryUntilSuccessful) {
      long long n = parse_integer(value, "num_attempts", elem.name);
      if (n < 1) {
        fail(ParseErrorCode::BadAttribute, "num_attempts must be >= 1");
      }
      node.num_attempts = static_cast<int>(n);
    } else if (name == "msec" && node.kind == NodeKind::Timeout) {
      long long ms = parse_integer(value, "msec", elem.name);
      if (ms < 0) {
        fail(ParseErrorCode::BadAttribute, "msec must be non-negative");
      }
      node.timeout_msec = ms;
    } else {
      node.attributes.emplace(name, value);
    }
  }

  switch (node.kind) {
    case NodeKind::Action:
    case NodeKind::Condition:
      if (elem.find_attribute("ID") == nullptr) {
        fail(ParseErrorCode::MissingAttribute,
             "<" + elem.name + "> requires an ID attribute");
      }
      if (node.id.empty()) {
        fail(ParseErrorCode::BadAttribute,
             "<" + elem.name + "> has an empty ID");
      }
      if (!elem.children.empty()) {
        fail(ParseErrorCode::ChildArity,
             "<" + elem.name + "> cannot have children");
      }
      break;
    case NodeKind::SubTree:
      if (node.id.empty()) {
        fail(ParseErrorCode::MissingAttribute,
             "<SubTree> requires an ID attribute");
      }
      if (!elem.children.empty()) {
        fail(ParseErrorCode::ChildArity, "<SubTree> cannot have children");
      }
      break;
    case NodeKind::Sequence:
    case NodeKind::Fallback:
      if (elem.children.empty()) {
        fail(ParseErrorCode::ChildArity,
             "<" + elem.name + "> requires at least one child");
      }
      break;
    case NodeKind::RetryUntilSuccessful:
      if (elem.find_attribute("num_attempts") == nullptr) {
        fail(ParseErrorCode::MissingAttribute,
             "<RetryUntilSuccessful> requires num_attempts");
      }
      if (elem.children.size() != 1) {
        fail(ParseErrorCode::ChildArity,
             "<RetryUntilSuccessful> requires exactly one child");
      }
      break;
    case NodeKind::Timeout:
      if (elem.find_attribute("msec") == nullptr) {
        fail(ParseErrorCode::MissingAttribute, "<Timeout> requires msec");
      }
      if (elem.children.size() != 1) {
        fail(ParseErrorCode::ChildArity,
             "<Timeout> requires exactly one child");
      }
      break;
  }

  node.children.reserve(elem.children.size());
  for (const xml::Element& child : elem.children) {
    node.children.push_back(map_node(child));
  }
  return node;
}

void collect_subtree_refs(const BtNode& node, std::set<std::string>& out) {
  if (node.kind == NodeKind::SubTree) out.insert(node.id);
  for (const BtNode& child : node.children) collect_subtree_refs(child, out);
}

}  // namespace

const char* parse_error_code_name(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::MalformedXml: return "MalformedXml";
    case ParseErrorCode::UnknownTag: return "UnknownTag";
    case ParseErrorCode::MissingAttribute: return "MissingAttribute";
    case ParseErrorCode::BadAttribute: return "BadAttribute";
    case ParseErrorCode::MissingMainTree: return "MissingMainTree";
    case ParseErrorCode::DuplicateTree: return "DuplicateTree";
    case ParseErrorCode::ChildArity: return "ChildArity";
    case ParseErrorCode::UnknownTreeReference: return "UnknownTreeReference";
    case ParseErrorCode::SubTreeCycle: return "SubTreeCycle";
    case ParseErrorCode::UnexpectedContent: return "UnexpectedContent";
  }
  return "?";
}

BehaviorTree parse_xml(std::string_view text) {
  xml::Document doc = [&] {
    try {
      return xml::parse_document(text);
    } catch (const xml::XmlError& e) {
      fail(ParseErrorCode::MalformedXml, e.what());
    }
  }();

  const xml::Element& root = doc.root;
  if (root.name != "root") {
    fail(ParseErrorCode::UnknownTag,
         "document element must be <root>, got <" + root.name + ">");
  }
  const std::string* main_id = root.find_attribute("main_tree_to_execute");
  if (main_id == nullptr || main_id->empty()) {
    fail(ParseErrorCode::MissingMainTree,
         "<root> requires main_tree_to_execute");
  }
  if (root.has_non_whitespace_text()) {
    fail(ParseErrorCode::UnexpectedContent, "<root> contains character data");
  }

  BehaviorTree tree;
  tree.main_tree_id = *main_id;
  for (const xml::Element& child : root.children) {
    if (child.name != "BehaviorTree") {
      fail(ParseErrorCode::UnknownTag,
           "expected <BehaviorTree>, got <" + child.name + ">");
    }
    const std::string* id = child.find_attribute("ID");
    if (id == nullptr || id->empty()) {
      fail(ParseErrorCode::MissingAttribute, "<BehaviorTree> requires an ID");
    }
    if (tree.find_tree(*id) != nullptr) {
      fail(ParseErrorCode::DuplicateTree, "duplicate BehaviorTree '" + *id + "'");
    }
    if (child.has_non_whitespace_text()) {
      fail(ParseErrorCode::UnexpectedContent,
           "<BehaviorTree> contains character data");
    }
    if (child.children.size() != 1) {
      fail(ParseErrorCode::ChildArity,
           "<BehaviorTree ID=\"" + *id + "\"> requires exactly one root node");
    }
    tree.trees.emplace_back(*id, map_node(child.children.front()));
  }

  if (tree.find_tree(tree.main_tree_id) == nullptr) {
    fail(ParseErrorCode::MissingMainTree,
         "main_tree_to_execute=\"" + tree.main_tree_id + "\" is not defined");
  }
  for (const auto& [id, root_node] : tree.trees) {
    std::set<std::string> refs;
    collect_subtree_refs(root_node, refs);
    for (const std::string& ref : refs) {
      if (tree.find_tree(ref) == nullptr) {
        fail(ParseErrorCode::UnknownTreeReference,
             "SubTree references undefined tree '" + ref + "'");
      }
    }
  }
  try {
    validate_tree(tree);
  } catch (const TreeInvariantError& e) {
    // Reference cycles are the only invariant the checks above can miss.
    fail(ParseErrorCode::SubTreeCycle, e.what());
  }
  return tree;
}

}  // namespace btforge::bt
