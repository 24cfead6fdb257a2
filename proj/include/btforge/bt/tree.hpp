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

#ifndef BTFORGE_BT_TREE_HPP_
#define BTFORGE_BT_TREE_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace btforge::bt {

enum class NodeKind {
  Sequence,
  Fallback,
  Action,
  Condition,
  RetryUntilSuccessful,
  Timeout,
  SubTree,
};

// Exact element name in the BehaviorTree.CPP dialect.
const char* node_kind_name(NodeKind kind);
std::optional<NodeKind> node_kind_from_tag(std::string_view tag);

bool is_control(NodeKind kind);    // Sequence, Fallback
bool is_decorator(NodeKind kind);  // RetryUntilSuccessful, Timeout
bool is_leaf(NodeKind kind);       // Action, Condition

struct BtNode {
  NodeKind kind = NodeKind::Sequence;
  // Action/Condition: primitive or condition name. SubTree: referenced tree.
  std::string id;
  // Remaining attributes, preserved verbatim (e.g. "obj" ports, SubTree
  // remaps). Never holds ID, num_attempts or msec.
  std::map<std::string, std::string> attributes;
  int num_attempts = 0;        // RetryUntilSuccessful, >= 1
  long long timeout_msec = 0;  // Timeout, >= 0
  std::vector<BtNode> children;

  const std::string* find_attribute(std::string_view name) const {
    auto it = attributes.find(std::string(name));
    return it == attributes.end() ? nullptr : &it->second;
  }
};

bool operator==(const BtNode& a, const BtNode& b);
inline bool operator!=(const BtNode& a, const BtNode& b) { return !(a == b); }

struct BehaviorTree {
  std::string main_tree_id;
  // (tree id, root) in document order; ids are unique.
  std::vector<std::pair<std::string, BtNode>> trees;

  const BtNode* find_tree(std::string_view id) const;
  const BtNode& main_tree() const;
};

// Structural equality: same main tree id and the same id -> root mapping,
// independent of declaration order.
bool operator==(const BehaviorTree& a, const BehaviorTree& b);
inline bool operator!=(const BehaviorTree& a, const BehaviorTree& b) {
  return !(a == b);
}

enum class TickStatus { Success, Failure, Running };
const char* tick_status_name(TickStatus status);

class TreeInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enforces arity, non-empty leaf ids, num_attempts >= 1, msec >= 0,
// resolvable SubTree references and absence of reference cycles.
// Throws TreeInvariantError on the first violation.
void validate_tree(const BehaviorTree& tree);

}  // namespace btforge::bt

#endif  // BTFORGE_BT_TREE_HPP_
