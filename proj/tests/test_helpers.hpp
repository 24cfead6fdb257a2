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

#ifndef BTFORGE_TESTS_TEST_HELPERS_HPP_
#define BTFORGE_TESTS_TEST_HELPERS_HPP_

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btforge/bt/tree.hpp"
#include "btforge/util/rng.hpp"

#ifndef BTFORGE_DATA_DIR
#define BTFORGE_DATA_DIR "data"
#endif

namespace btforge::testing {

inline std::filesystem::path data_dir() { return BTFORGE_DATA_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Fresh scratch directory under the system temp root; wiped on creation.
// Scoped by pid so concurrently running test binaries do not collide.
inline std::filesystem::path fresh_dir(const std::string& name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("btforge_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// The teapot document from the training-sample figure, comment and padded
// attribute whitespace included.
inline const char* teapot_xml() {
  return R"(<root main_tree_to_execute="MainTree">
  <BehaviorTree ID="MainTree">
    <Sequence>
      <Action ID="NAVIGATE_TO" obj="teapot"/>
      <Action ID="GRASP"       obj="teapot"/>
      <Action ID="NAVIGATE_TO" obj="stove"/>
      <Action ID="PLACE_ON_TOP" obj="stove"/>
    </Sequence>
  </BehaviorTree>
</root>
)";
}

inline bt::BtNode make_action(const std::string& id, const std::string& obj) {
  bt::BtNode node;
  node.kind = bt::NodeKind::Action;
  node.id = id;
  if (!obj.empty()) node.attributes.emplace("obj", obj);
  return node;
}

inline bt::BtNode make_condition(const std::string& id,
                                 const std::string& obj) {
  bt::BtNode node;
  node.kind = bt::NodeKind::Condition;
  node.id = id;
  if (!obj.empty()) node.attributes.emplace("obj", obj);
  return node;
}

inline bt::BtNode make_sequence(std::vector<bt::BtNode> children) {
  bt::BtNode node;
  node.kind = bt::NodeKind::Sequence;
  node.children = std::move(children);
  return node;
}

inline bt::BehaviorTree single_tree(bt::BtNode root,
                                    const std::string& id = "MainTree") {
  bt::BehaviorTree tree;
  tree.main_tree_id = id;
  tree.trees.emplace_back(id, std::move(root));
  return tree;
}

// Random valid trees over the full node vocabulary, for property tests.
class RandomTreeGenerator {
 public:
  explicit RandomTreeGenerator(std::uint64_t seed) : rng_(seed) {}

  bt::BehaviorTree tree(size_t max_nodes = 8) {
    bt::BehaviorTree out;
    out.main_tree_id = "MainTree";
    // Optional helper tree, never itself containing SubTree nodes.
    bool with_subtree = rng_.bernoulli(0.25);
    if (with_subtree) {
      size_t budget = 1 + rng_.index(2);
      out.trees.emplace_back("Helper", node(budget, /*allow_subtree=*/false));
    }
    size_t budget = 1 + rng_.index(max_nodes);
    out.trees.emplace_back("MainTree", node(budget, with_subtree));
    std::rotate(out.trees.begin(),
                out.trees.end() - 1, out.trees.end());  // main first
    return out;
  }

 private:
  bt::BtNode node(size_t budget, bool allow_subtree) {
    if (budget <= 1) return leaf(allow_subtree);
    switch (rng_.index(4)) {
      case 0: {  // Sequence
        bt::BtNode out;
        out.kind = bt::NodeKind::Sequence;
        fill_children(out, budget - 1, allow_subtree);
        return out;
      }
      case 1: {  // Fallback
        bt::BtNode out;
        out.kind = bt::NodeKind::Fallback;
        fill_children(out, budget - 1, allow_subtree);
        return out;
      }
      case 2: {  // RetryUntilSuccessful
        bt::BtNode out;
        out.kind = bt::NodeKind::RetryUntilSuccessful;
        out.num_attempts = 1 + static_cast<int>(rng_.index(4));
        out.children.push_back(node(budget - 1, allow_subtree));
        return out;
      }
      default: {  // Timeout
        bt::BtNode out;
        out.kind = bt::NodeKind::Timeout;
        out.timeout_msec = static_cast<long long>(rng_.index(10000));
        out.children.push_back(node(budget - 1, allow_subtree));
        return out;
      }
    }
  }

  void fill_children(bt::BtNode& parent, size_t budget, bool allow_subtree) {
    size_t count = 1 + rng_.index(std::max<size_t>(1, std::min<size_t>(3, budget)));
    for (size_t i = 0; i < count && budget > 0; ++i) {
      size_t share = i + 1 == count ? budget : 1 + rng_.index(budget);
      share = std::min(share, budget);
      parent.children.push_back(node(share, allow_subtree));
      budget -= share;
    }
    if (parent.children.empty()) parent.children.push_back(leaf(allow_subtree));
  }

  bt::BtNode leaf(bool allow_subtree) {
    static const char* kActions[] = {"NAVIGATE_TO", "GRASP", "PLACE_ON_TOP",
                                     "PLACE_INSIDE", "OPEN", "CLOSE",
                                     "TOGGLE_ON", "WIPE"};
    static const char* kConditions[] = {"IS_OPEN", "IS_NEAR", "IS_HELD"};
    static const char* kObjects[] = {"teapot", "stove", "mug", "fridge",
                                     "table", "box"};
    if (allow_subtree && rng_.bernoulli(0.15)) {
      bt::BtNode out;
      out.kind = bt::NodeKind::SubTree;
      out.id = "Helper";
      return out;
    }
    if (rng_.bernoulli(0.25)) {
      return make_condition(kConditions[rng_.index(3)], kObjects[rng_.index(6)]);
    }
    return make_action(kActions[rng_.index(8)], kObjects[rng_.index(6)]);
  }

  util::Rng rng_;
};

// Independent recompute of the tag / action sets by explicit-stack walk;
// deliberately shares nothing with bt::analysis.
inline void naive_walk(const bt::BehaviorTree& tree,
                       std::set<std::string>& decorators,
                       std::set<std::string>& actions) {
  std::vector<const bt::BtNode*> stack;
  for (const auto& [_, root] : tree.trees) stack.push_back(&root);
  while (!stack.empty()) {
    const bt::BtNode* node = stack.back();
    stack.pop_back();
    switch (node->kind) {
      case bt::NodeKind::Action: actions.insert(node->id); break;
      case bt::NodeKind::Condition: decorators.insert("Condition"); break;
      case bt::NodeKind::Fallback: decorators.insert("Fallback"); break;
      case bt::NodeKind::RetryUntilSuccessful:
        decorators.insert("RetryUntilSuccessful");
        break;
      case bt::NodeKind::Timeout: decorators.insert("Timeout"); break;
      case bt::NodeKind::SubTree: decorators.insert("SubTree"); break;
      case bt::NodeKind::Sequence: break;
    }
    for (const bt::BtNode& child : node->children) stack.push_back(&child);
  }
}

}  // namespace btforge::testing

#endif  // BTFORGE_TESTS_TEST_HELPERS_HPP_
