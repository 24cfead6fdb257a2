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

#ifndef BTFORGE_DATASET_RECORD_HPP_
#define BTFORGE_DATASET_RECORD_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "btforge/dataset/scene_analysis.hpp"

namespace btforge::dataset {

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One two-turn training sample: user turn (frame, instruction, allowed
// actions), assistant turn (scene analysis + BT XML).
struct EpisodeRecord {
  std::string episode_id;
  std::string record_id;
  std::string initial_frame;  // path relative to the record store
  std::string contact_sheet;  // path relative to the record store
  std::string instruction;
  std::vector<std::string> allowed_actions;  // first-appearance order
  SceneAnalysis scene_analysis;
  std::string bt_xml;
  bool structurally_augmented = false;
  bool lexically_augmented = false;

  bool operator==(const EpisodeRecord&) const = default;
};

std::string record_to_json(const EpisodeRecord& record);
EpisodeRecord record_from_json(const std::string& text);

void save_record(const EpisodeRecord& record,
                 const std::filesystem::path& path);
EpisodeRecord load_record(const std::filesystem::path& path);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_RECORD_HPP_
