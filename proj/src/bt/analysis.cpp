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

#include "btforge/bt/analysis.hpp"

namespace btforge::bt {

namespace {

template <typename Fn>
void walk(const BtNode& node, Fn&& fn) {
  fn(node);
  for (const BtNode& child : node.children) walk(child, fn);
}

template <typename Fn>
void walk_document(const BehaviorTree& tree, Fn&& fn) {
  for (const auto& [_, root] : tree.trees) walk(root, fn);
}

}  // namespace

const std::set<std::string>& decorator_vocabulary() {
  static const std::set<std::string> vocab = {
      "RetryUntilSuccessful", "Fallback", "Condition", "Timeout", "SubTree"};
  return vocab;
}

std::set<std::string> extract_action_set(const BehaviorTree& tree) {
  std::set<std::string> out;
  walk_document(tree, [&](const BtNode& node) {
    if (node.kind == NodeKind::Action) out.insert(node.id);
  });
  return out;
}

std::vector<std::string> extract_action_list(const BehaviorTree& tree) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  walk_document(tree, [&](const BtNode& node) {
    if (node.kind == NodeKind::Action && seen.insert(node.id).second) {
      out.push_back(node.id);
    }
  });
  return out;
}

std::vector<std::string> action_sequence(const BehaviorTree& tree) {
  std::vector<std::string> out;
  walk_document(tree, [&](const BtNode& node) {
    if (node.kind == NodeKind::Action) out.push_back(node.id);
  });
  return out;
}

std::set<std::string> extract_decorator_set(const BehaviorTree& tree) {
  std::set<std::string> out;
  walk_document(tree, [&](const BtNode& node) {
    switch (node.kind) {
      case NodeKind::RetryUntilSuccessful:
      case NodeKind::Fallback:
      case NodeKind::Condition:
      case NodeKind::Timeout:
      case NodeKind::SubTree:
        out.insert(node_kind_name(node.kind));
        break;
      default:
        break;
    }
  });
  return out;
}

}  // namespace btforge::bt
