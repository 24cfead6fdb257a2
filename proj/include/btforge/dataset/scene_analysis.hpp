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

#ifndef BTFORGE_DATASET_SCENE_ANALYSIS_HPP_
#define BTFORGE_DATASET_SCENE_ANALYSIS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace btforge::dataset {

class MalformedSceneAnalysis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The five-field structured scene description preceding each plan.
struct SceneAnalysis {
  std::string target;
  std::string destination;
  std::string expanded_instruction;
  std::string scene_context;
  std::string expected_sequence;

  bool operator==(const SceneAnalysis&) const = default;
};

// Extracts the five fields from a generator response. Accepts an optional
// `scene_analysis:` header, keys in any order, plain or double-quoted
// values; quoted values may fold across indented continuation lines.
// Throws MalformedSceneAnalysis if any field is missing or empty.
SceneAnalysis parse_scene_analysis(std::string_view text);

// Canonical YAML block, one line per field, double-quoted values.
std::string to_yaml(const SceneAnalysis& analysis);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_SCENE_ANALYSIS_HPP_
