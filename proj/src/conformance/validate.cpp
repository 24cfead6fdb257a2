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

#include "btforge/conformance/validate.hpp"

#include <stdexcept>

#include "btforge/bt/analysis.hpp"
#include "btforge/bt/parse.hpp"

namespace btforge::conformance {

ValidationReport validate(std::string_view text, const PrimitiveLibrary& library,
                          const std::optional<std::set<std::string>>& allowed) {
  if (allowed) {
    for (const std::string& name : *allowed) {
      if (!library.contains(name)) {
        throw std::invalid_argument("allowed action '" + name +
                                    "' is not in the primitive library");
      }
    }
  }

  ValidationReport report;
  bt::BehaviorTree tree;
  try {
    tree = bt::parse_xml(text);
    report.xml_valid = true;
    report.btcpp_valid = true;
  } catch (const bt::ParseError& e) {
    report.xml_valid = e.code() != bt::ParseErrorCode::MalformedXml;
    report.diagnostic =
        std::string(bt::parse_error_code_name(e.code())) + ": " + e.what();
    return report;
  }

  for (const std::string& action : bt::extract_action_set(tree)) {
    if (!library.contains(action)) report.unknown_actions.push_back(action);
    if (allowed && allowed->count(action) == 0) {
      report.disallowed_actions.push_back(action);
    }
  }
  report.verdict = report.btcpp_valid && report.unknown_actions.empty() &&
                   report.disallowed_actions.empty();
  return report;
}

std::pair<double, double> validity_rates(const std::vector<std::string>& texts,
                                         const PrimitiveLibrary& library) {
  if (texts.empty()) throw EmptyInputError("validity_rates: no inputs");
  size_t xml_ok = 0;
  size_t btcpp_ok = 0;
  for (const std::string& text : texts) {
    ValidationReport report = validate(text, library);
    xml_ok += report.xml_valid ? 1 : 0;
    btcpp_ok += report.btcpp_valid ? 1 : 0;
  }
  double n = static_cast<double>(texts.size());
  return {static_cast<double>(xml_ok) / n, static_cast<double>(btcpp_ok) / n};
}

namespace {

void check_node_attributes(const bt::BtNode& node,
                           const PrimitiveLibrary& library,
                           std::vector<std::string>& out) {
  if (node.kind == bt::NodeKind::Action) {
    if (const PrimitiveSpec* spec = library.find(node.id)) {
      for (const std::string& attr : spec->required_attributes) {
        if (node.find_attribute(attr) == nullptr) {
          out.push_back(node.id + ": missing " + attr);
        }
      }
    }
  }
  for (const bt::BtNode& child : node.children) {
    check_node_attributes(child, library, out);
  }
}

}  // namespace

std::vector<std::string> missing_required_attributes(
    const bt::BehaviorTree& tree, const PrimitiveLibrary& library) {
  std::vector<std::string> out;
  for (const auto& [_, root] : tree.trees) {
    check_node_attributes(root, library, out);
  }
  return out;
}

}  // namespace btforge::conformance
