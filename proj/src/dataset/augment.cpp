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

#include "btforge/dataset/augment.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "btforge/bt/analysis.hpp"
#include "btforge/bt/parse.hpp"
#include "btforge/bt/serialize.hpp"
#include "btforge/util/rng.hpp"

namespace btforge::dataset {

namespace {

bool is_grasp(std::string_view id) {
  return id == "GRASP" || id == "GRAB" || id == "PICK";
}

bool is_placement(std::string_view id) {
  return id == "PLACE_ON_TOP" || id == "PLACE_INSIDE" || id == "PLACE_NEXT_TO";
}

// Visits Action nodes in document order with a mutable reference.
template <typename Fn>
void for_each_action(bt::BehaviorTree& tree, Fn&& fn) {
  auto walk = [&](auto&& self, bt::BtNode& node) -> void {
    if (node.kind == bt::NodeKind::Action) fn(node);
    for (bt::BtNode& child : node.children) self(self, child);
  };
  for (auto& [_, root] : tree.trees) walk(walk, root);
}

// Replaces the index-th Action occurrence via `make`, which receives the
// node by value and returns its replacement subtree. Never entered with an
// Action node; the caller handles Action roots directly.
bool replace_action(bt::BtNode& node, size_t& remaining,
                    const std::function<bt::BtNode(bt::BtNode)>& make) {
  for (bt::BtNode& child : node.children) {
    if (child.kind == bt::NodeKind::Action) {
      if (remaining == 0) {
        child = make(std::move(child));
        return true;
      }
      --remaining;
    } else if (replace_action(child, remaining, make)) {
      return true;
    }
  }
  return false;
}

std::string describe_action(const bt::BtNode& action) {
  std::string text = action.id;
  if (const std::string* obj = action.find_attribute("obj")) {
    text += " " + *obj;
  }
  return text;
}

}  // namespace

std::vector<std::string> derive_allowed_actions(std::string_view bt_xml) {
  return bt::extract_action_list(bt::parse_xml(bt_xml));
}

EpisodeRecord structural_augment(const EpisodeRecord& record,
                                 const AugmentConstruct& construct,
                                 size_t action_index) {
  bt::BehaviorTree tree = bt::parse_xml(record.bt_xml);
  size_t action_count = bt::action_sequence(tree).size();
  if (action_index >= action_count) {
    throw AugmentError("BadTarget: action index " +
                       std::to_string(action_index) + " out of range (" +
                       std::to_string(action_count) + " actions)");
  }

  std::string clause;
  auto make = [&](bt::BtNode action) -> bt::BtNode {
    std::string what = describe_action(action);
    bt::BtNode wrapper;
    switch (construct.kind) {
      case AugmentConstruct::Kind::Retry: {
        if (construct.retry_attempts < 1) {
          throw AugmentError("retry construct needs num_attempts >= 1");
        }
        wrapper.kind = bt::NodeKind::RetryUntilSuccessful;
        wrapper.num_attempts = construct.retry_attempts;
        wrapper.children.push_back(std::move(action));
        clause = " Retry up to " + std::to_string(construct.retry_attempts) +
                 " times if " + what + " fails.";
        break;
      }
      case AugmentConstruct::Kind::Timeout: {
        if (construct.timeout_msec < 0) {
          throw AugmentError("timeout construct needs msec >= 0");
        }
        wrapper.kind = bt::NodeKind::Timeout;
        wrapper.timeout_msec = construct.timeout_msec;
        wrapper.children.push_back(std::move(action));
        clause = " Allow at most " + std::to_string(construct.timeout_msec) +
                 " milliseconds for " + what + ".";
        break;
      }
      case AugmentConstruct::Kind::Fallback: {
        // Recovery branch: approach the object again, then repeat the action.
        const std::string* obj = action.find_attribute("obj");
        bt::BtNode navigate;
        navigate.kind = bt::NodeKind::Action;
        navigate.id = "NAVIGATE_TO";
        if (obj != nullptr) navigate.attributes.emplace("obj", *obj);
        bt::BtNode retry_branch;
        retry_branch.kind = bt::NodeKind::Sequence;
        retry_branch.children.push_back(std::move(navigate));
        retry_branch.children.push_back(action);

        wrapper.kind = bt::NodeKind::Fallback;
        wrapper.children.push_back(std::move(action));
        wrapper.children.push_back(std::move(retry_branch));
        clause = " If " + what + " fails, navigate to " +
                 (obj != nullptr ? *obj : std::string("the target")) +
                 " again and retry it.";
        break;
      }
    }
    return wrapper;
  };

  size_t remaining = action_index;
  bool replaced = false;
  for (auto& [_, root] : tree.trees) {
    if (root.kind == bt::NodeKind::Action) {
      if (remaining == 0) {
        root = make(std::move(root));
        replaced = true;
        break;
      }
      --remaining;
      continue;
    }
    if (replace_action(root, remaining, make)) {
      replaced = true;
      break;
    }
  }
  if (!replaced) throw AugmentError("BadTarget: target not found");

  bt::validate_tree(tree);
  EpisodeRecord out = record;
  out.bt_xml = bt::serialize(tree);
  out.instruction = record.instruction + clause;
  out.allowed_actions = bt::extract_action_list(tree);
  out.structurally_augmented = true;
  return out;
}

SynonymMap SynonymMap::default_map() {
  SynonymMap map;
  map.add_group({"GRASP", "GRAB", "PICK"});
  return map;
}

SynonymMap SynonymMap::load(const std::filesystem::path& path,
                            const conformance::PrimitiveLibrary& library) {
  std::ifstream in(path);
  if (!in) throw AugmentError("cannot open synonym config: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), library);
}

SynonymMap SynonymMap::parse(std::string_view text,
                             const conformance::PrimitiveLibrary& library) {
  SynonymMap map;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> group;
    std::string name;
    while (fields >> name) {
      if (name[0] == '#') break;
      if (!library.contains(name)) {
        throw AugmentError("line " + std::to_string(line_no) + ": synonym '" +
                           name + "' is not in the primitive library");
      }
      group.push_back(name);
    }
    if (group.empty()) continue;
    if (group.size() < 2) {
      throw AugmentError("line " + std::to_string(line_no) +
                         ": a synonym group needs at least two names");
    }
    map.add_group(std::move(group));
  }
  return map;
}

void SynonymMap::add_group(std::vector<std::string> group) {
  for (const std::string& name : group) {
    if (group_of(name) != nullptr) {
      throw AugmentError("'" + name + "' appears in two synonym groups");
    }
  }
  groups_.push_back(std::move(group));
}

const std::vector<std::string>* SynonymMap::group_of(
    std::string_view name) const {
  for (const auto& group : groups_) {
    for (const std::string& member : group) {
      if (member == name) return &group;
    }
  }
  return nullptr;
}

EpisodeRecord lexical_augment(const EpisodeRecord& record,
                              const SynonymMap& synonyms, double probability,
                              std::uint64_t seed) {
  bt::BehaviorTree tree = bt::parse_xml(record.bt_xml);
  util::Rng rng(seed);
  bool changed = false;

  // Pass 1: per distinct eligible primitive, maybe swap in a synonym
  // (applied to every occurrence).
  std::map<std::string, std::string> renames;
  for (const std::string& name : bt::extract_action_list(tree)) {
    const std::vector<std::string>* group = synonyms.group_of(name);
    if (group == nullptr) continue;
    bool swap = rng.bernoulli(probability);
    if (!swap) continue;
    std::vector<std::string> candidates;
    for (const std::string& member : *group) {
      if (member != name) candidates.push_back(member);
    }
    if (candidates.empty()) continue;
    renames[name] = candidates[rng.index(candidates.size())];
  }
  if (!renames.empty()) {
    for_each_action(tree, [&](bt::BtNode& action) {
      auto it = renames.find(action.id);
      if (it != renames.end()) {
        action.id = it->second;
        changed = true;
      }
    });
  }

  // Pass 2: explicit-object variants for placement actions; the object is
  // the most recent grasp in tree order.
  std::string held;
  for_each_action(tree, [&](bt::BtNode& action) {
    if (is_grasp(action.id)) {
      if (const std::string* obj = action.find_attribute("obj")) held = *obj;
      return;
    }
    if (!is_placement(action.id)) return;
    bool explicit_object = rng.bernoulli(probability);
    if (!explicit_object) return;
    if (held.empty()) {
      throw NoPriorGrasp("explicit-object variant for " + action.id +
                         " requested before any grasp in tree order");
    }
    if (action.attributes.emplace("item", held).second) changed = true;
  });

  if (!changed) return record;

  bt::validate_tree(tree);
  EpisodeRecord out = record;
  out.bt_xml = bt::serialize(tree);
  out.allowed_actions = bt::extract_action_list(tree);
  out.lexically_augmented = true;
  return out;
}

}  // namespace btforge::dataset
