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

#include "btforge/dataset/record.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace btforge::dataset {

using nlohmann::json;

std::string record_to_json(const EpisodeRecord& record) {
  json doc;
  doc["episode_id"] = record.episode_id;
  doc["record_id"] = record.record_id;
  doc["initial_frame"] = record.initial_frame;
  doc["contact_sheet"] = record.contact_sheet;
  doc["instruction"] = record.instruction;
  doc["allowed_actions"] = record.allowed_actions;
  doc["scene_analysis"] = {
      {"target", record.scene_analysis.target},
      {"destination", record.scene_analysis.destination},
      {"expanded_instruction", record.scene_analysis.expanded_instruction},
      {"scene_context", record.scene_analysis.scene_context},
      {"expected_sequence", record.scene_analysis.expected_sequence},
  };
  doc["bt_xml"] = record.bt_xml;
  doc["provenance"] = {
      {"structurally_augmented", record.structurally_augmented},
      {"lexically_augmented", record.lexically_augmented},
  };
  return doc.dump(2) + "\n";
}

EpisodeRecord record_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RecordError(std::string("record is not valid JSON: ") + e.what());
  }
  try {
    EpisodeRecord record;
    record.episode_id = doc.at("episode_id").get<std::string>();
    record.record_id = doc.at("record_id").get<std::string>();
    record.initial_frame = doc.at("initial_frame").get<std::string>();
    record.contact_sheet = doc.at("contact_sheet").get<std::string>();
    record.instruction = doc.at("instruction").get<std::string>();
    record.allowed_actions =
        doc.at("allowed_actions").get<std::vector<std::string>>();
    const json& analysis = doc.at("scene_analysis");
    record.scene_analysis.target = analysis.at("target").get<std::string>();
    record.scene_analysis.destination =
        analysis.at("destination").get<std::string>();
    record.scene_analysis.expanded_instruction =
        analysis.at("expanded_instruction").get<std::string>();
    record.scene_analysis.scene_context =
        analysis.at("scene_context").get<std::string>();
    record.scene_analysis.expected_sequence =
        analysis.at("expected_sequence").get<std::string>();
    record.bt_xml = doc.at("bt_xml").get<std::string>();
    const json& provenance = doc.at("provenance");
    record.structurally_augmented =
        provenance.at("structurally_augmented").get<bool>();
    record.lexically_augmented =
        provenance.at("lexically_augmented").get<bool>();
    return record;
  } catch (const json::exception& e) {
    throw RecordError(std::string("record schema violation: ") + e.what());
  }
}

void save_record(const EpisodeRecord& record,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RecordError("cannot write " + path.string());
  out << record_to_json(record);
}

EpisodeRecord load_record(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RecordError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return record_from_json(buffer.str());
}

}  // namespace btforge::dataset
