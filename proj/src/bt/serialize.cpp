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

#include "btforge/bt/serialize.hpp"

#include <algorithm>

#include "btforge/xml/dom.hpp"

namespace btforge::bt {

namespace {

void indent(std::string& out, int depth) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
}

void write_attribute(std::string& out, const std::string& name,
                     const std::string& value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += xml::escape_attribute(value);
  out += '"';
}

void write_node(std::string& out, const BtNode& node, int depth) {
  indent(out, depth);
  out += '<';
  out += node_kind_name(node.kind);

  if (is_leaf(node.kind) || node.kind == NodeKind::SubTree) {
    write_attribute(out, "ID", node.id);
  }
  // attributes is an ordered map, so iteration is already alphabetical;
  // num_attempts / msec slot in at their sorted position.
  auto it = node.attributes.begin();
  auto emit_pending = [&](const std::string& upto) {
    while (it != node.attributes.end() && it->first < upto) {
      write_attribute(out, it->first, it->second);
      ++it;
    }
  };
  if (node.kind == NodeKind::RetryUntilSuccessful) {
    emit_pending("num_attempts");
    write_attribute(out, "num_attempts", std::to_string(node.num_attempts));
  } else if (node.kind == NodeKind::Timeout) {
    emit_pending("msec");
    write_attribute(out, "msec", std::to_string(node.timeout_msec));
  }
  for (; it != node.attributes.end(); ++it) {
    write_attribute(out, it->first, it->second);
  }

  if (node.children.empty()) {
    out += "/>\n";
    return;
  }
  out += ">\n";
  for (const BtNode& child : node.children) write_node(out, child, depth + 1);
  indent(out, depth);
  out += "</";
  out += node_kind_name(node.kind);
  out += ">\n";
}

}  // namespace

std::string serialize(const BehaviorTree& tree) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<root main_tree_to_execute=\"";
  out += xml::escape_attribute(tree.main_tree_id);
  out += "\">\n";

  std::vector<const std::pair<std::string, BtNode>*> ordered;
  ordered.reserve(tree.trees.size());
  for (const auto& entry : tree.trees) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(), [&](const auto* a, const auto* b) {
    bool a_main = a->first == tree.main_tree_id;
    bool b_main = b->first == tree.main_tree_id;
    if (a_main != b_main) return a_main;
    return a->first < b->first;
  });

  for (const auto* entry : ordered) {
    out += "  <BehaviorTree ID=\"";
    out += xml::escape_attribute(entry->first);
    out += "\">\n";
    write_node(out, entry->second, 2);
    out += "  </BehaviorTree>\n";
  }
  out += "</root>\n";
  return out;
}

}  // namespace btforge::bt
