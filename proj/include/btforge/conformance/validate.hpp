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

#ifndef BTFORGE_CONFORMANCE_VALIDATE_HPP_
#define BTFORGE_CONFORMANCE_VALIDATE_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "btforge/bt/tree.hpp"
#include "btforge/conformance/library.hpp"

namespace btforge::conformance {

// Deployability report. All failure modes are fields, never exceptions.
struct ValidationReport {
  bool xml_valid = false;    // well-formed XML
  bool btcpp_valid = false;  // parses in the BehaviorTree.CPP dialect
  std::vector<std::string> unknown_actions;     // actions outside the library
  std::vector<std::string> disallowed_actions;  // actions outside `allowed`
  bool verdict = false;
  // Diagnostic only: first parse error when btcpp_valid is false.
  std::string diagnostic;
};

// Checks that `text` parses in the dialect and that every Action id belongs
// to the library; when `allowed` is given, additionally that every Action id
// belongs to it. Precondition: allowed (if present) is a subset of the
// library names.
ValidationReport validate(std::string_view text, const PrimitiveLibrary& library,
                          const std::optional<std::set<std::string>>& allowed =
                              std::nullopt);

class EmptyInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fractions of texts that are well-formed XML / dialect-parseable.
std::pair<double, double> validity_rates(const std::vector<std::string>& texts,
                                         const PrimitiveLibrary& library);

// "ACTION: missing attr" entries for Action nodes lacking an attribute the
// library marks as required. Informational; does not affect verdicts.
std::vector<std::string> missing_required_attributes(
    const bt::BehaviorTree& tree, const PrimitiveLibrary& library);

}  // namespace btforge::conformance

#endif  // BTFORGE_CONFORMANCE_VALIDATE_HPP_
