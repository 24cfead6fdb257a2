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

#include "btforge/bt/tree.hpp"

#include <algorithm>
#include <set>

namespace btforge::bt {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Sequence: return "Sequence";
    case NodeKind::Fallback: return "Fallback";
    case NodeKind::Action: return "Action";
    case NodeKind::Condition: return "Condition";
    case NodeKind::RetryUntilSuccessful: return "RetryUntilSuccessful";
    case NodeKind::Timeout: return "Timeout";
    case NodeKind::SubTree: return "SubTree";
  }
  return "?";
}

std::optional<NodeKind> node_kind_from_tag(std::string_view tag) {
  if (tag == "Sequence") return NodeKind::Sequence;
  if (tag == "Fallback") return NodeKind::Fallback;
  if (tag == "Action") return NodeKind::Action;
  if (tag == "Condition") return NodeKind::Condition;
  if (tag == "RetryUntilSuccessful") return NodeKind::RetryUntilSuccessful;
  if (tag == "Timeout") return NodeKind::Timeout;
  if (tag == "SubTree") return NodeKind::SubTree;
  return std::nullopt;
}

bool is_control(NodeKind kind) {
  return kind == NodeKind::Sequence || kind == NodeKind::Fallback;
}

bool is_decorator(NodeKind kind) {
  return kind == NodeKind::RetryUntilSuccessful || kind == NodeKind::Timeout;
}

bool is_leaf(NodeKind kind) {
  return kind == NodeKind::Action || kind == NodeKind::Condition;
}

bool operator==(const BtNode& a, const BtNode& b) {
  return a.kind == b.kind && a.id == b.id && a.attributes == b.attributes &&
         a.num_attempts == b.num_attempts && a.timeout_msec == b.timeout_msec &&
         a.children == b.children;
}

const BtNode* BehaviorTree::find_tree(std::string_view id) const {
  for (const auto& [tree_id, root] : trees) {
    if (tree_id == id) return &root;
  }
  return nullptr;
}

const BtNode& BehaviorTree::main_tree() const {
  const BtNode* root = find_tree(main_tree_id);
  if (root == nullptr) {
    throw TreeInvariantError("main tree '" + main_tree_id + "' is not defined");
  }
  return *root;
}

bool operator==(const BehaviorTree& a, const BehaviorTree& b) {
  if (a.main_tree_id != b.main_tree_id) return false;
  if (a.trees.size() != b.trees.size()) return false;
  for (const auto& [id, root] : a.trees) {
    const BtNode* other = b.find_tree(id);
    if (other == nullptr || !(root == *other)) return false;
  }
  return true;
}

const char* tick_status_name(TickStatus status) {
  switch (status) {
    case TickStatus::Success: return "Success";
    case TickStatus::Failure: return "Failure";
    case TickStatus::Running: return "Running";
  }
  return "?";
}

namespace {

void validate_node(const BtNode& node, const BehaviorTree& tree) {
  switch (node.kind) {
    case NodeKind::Sequence:
    case NodeKind::Fallback:
      if (node.children.empty()) {
        throw TreeInvariantError(std::string(node_kind_name(node.kind)) +
                                 " must have at least one child");
      }
      break;
    case NodeKind::RetryUntilSuccessful:
      if (node.num_attempts < 1) {
        throw TreeInvariantError("num_attempts must be >= 1");
      }
      if (node.children.size() != 1) {
        throw TreeInvariantError("RetryUntilSuccessful must have one child");
      }
      break;
    case NodeKind::Timeout:
      if (node.timeout_msec < 0) {
        throw TreeInvariantError("msec must be non-negative");
      }
      if (node.children.size() != 1) {
        throw TreeInvariantError("Timeout must have one child");
      }
      break;
    case NodeKind::Action:
    case NodeKind::Condition:
      if (node.id.empty()) {
        throw TreeInvariantError(std::string(node_kind_name(node.kind)) +
                                 " has an empty ID");
      }
      if (!node.children.empty()) {
        throw TreeInvariantError("leaf nodes cannot have children");
      }
      break;
    case NodeKind::SubTree:
      if (node.id.empty()) throw TreeInvariantError("SubTree has an empty ID");
      if (!node.children.empty()) {
        throw TreeInvariantError("SubTree cannot have children");
      }
      if (tree.find_tree(node.id) == nullptr) {
        throw TreeInvariantError("SubTree references undefined tree '" +
                                 node.id + "'");
      }
      break;
  }
  for (const BtNode& child : node.children) validate_node(child, tree);
}

void collect_references(const BtNode& node, std::set<std::string>& out) {
  if (node.kind == NodeKind::SubTree) out.insert(node.id);
  for (const BtNode& child : node.children) collect_references(child, out);
}

void check_cycles(const BehaviorTree& tree) {
  // DFS over the tree-id reference graph.
  std::map<std::string, std::set<std::string>> refs;
  for (const auto& [id, root] : tree.trees) collect_references(root, refs[id]);

  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> marks;
  auto visit = [&](auto&& self, const std::string& id) -> void {
    Mark& m = marks[id];
    if (m == Mark::Grey) {
      throw TreeInvariantError("SubTree reference cycle through '" + id + "'");
    }
    if (m == Mark::Black) return;
    m = Mark::Grey;
    for (const std::string& next : refs[id]) self(self, next);
    marks[id] = Mark::Black;
  };
  for (const auto& [id, _] : tree.trees) visit(visit, id);
}

}  // namespace

void validate_tree(const BehaviorTree& tree) {
  if (tree.find_tree(tree.main_tree_id) == nullptr) {
    throw TreeInvariantError("main tree '" + tree.main_tree_id +
                             "' is not defined");
  }
  std::set<std::string> seen;
  for (const auto& [id, root] : tree.trees) {
    if (!seen.insert(id).second) {
      throw TreeInvariantError("duplicate tree id '" + id + "'");
    }
    validate_node(root, tree);
  }
  check_cycles(tree);
}

}  // namespace btforge::bt
