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

#include "btforge/dataset/scene_analysis.hpp"

#include <array>
#include <map>
#include <sstream>
#include <vector>

namespace btforge::dataset {

namespace {

constexpr std::array<const char*, 5> kFields = {
    "target", "destination", "expanded_instruction", "scene_context",
    "expected_sequence"};

std::string trim(std::string_view s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  size_t end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::string quote(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

SceneAnalysis parse_scene_analysis(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  std::map<std::string, std::string> values;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string stripped = trim(lines[i]);
    size_t colon = stripped.find(':');
    if (colon == std::string::npos) continue;
    std::string key = trim(stripped.substr(0, colon));
    bool known = false;
    for (const char* field : kFields) {
      if (key == field) known = true;
    }
    if (!known) continue;

    std::string raw = trim(stripped.substr(colon + 1));
    std::string value;
    if (!raw.empty() && raw.front() == '"') {
      // Quoted scalar, possibly folded over indented continuation lines.
      std::string buffer = raw.substr(1);
      bool closed = false;
      size_t j = i;
      for (;;) {
        std::string decoded;
        for (size_t p = 0; p < buffer.size(); ++p) {
          char c = buffer[p];
          if (c == '\\' && p + 1 < buffer.size()) {
            decoded.push_back(buffer[++p]);
          } else if (c == '"') {
            closed = true;
            break;
          } else {
            decoded.push_back(c);
          }
        }
        if (!value.empty() && !decoded.empty()) value += ' ';
        value += trim(decoded);
        if (closed) break;
        if (++j >= lines.size()) {
          throw MalformedSceneAnalysis("unterminated quoted value for '" +
                                       key + "'");
        }
        buffer = trim(lines[j]);
      }
      i = j;
    } else {
      value = raw;
    }
    values[key] = value;
  }

  SceneAnalysis analysis;
  for (const char* field : kFields) {
    auto it = values.find(field);
    if (it == values.end() || it->second.empty()) {
      throw MalformedSceneAnalysis("scene analysis is missing field '" +
                                   std::string(field) + "'");
    }
  }
  analysis.target = values["target"];
  analysis.destination = values["destination"];
  analysis.expanded_instruction = values["expanded_instruction"];
  analysis.scene_context = values["scene_context"];
  analysis.expected_sequence = values["expected_sequence"];
  return analysis;
}

std::string to_yaml(const SceneAnalysis& analysis) {
  std::string out = "scene_analysis:\n";
  out += "  target: " + quote(analysis.target) + "\n";
  out += "  destination: " + quote(analysis.destination) + "\n";
  out += "  expanded_instruction: " + quote(analysis.expanded_instruction) + "\n";
  out += "  scene_context: " + quote(analysis.scene_context) + "\n";
  out += "  expected_sequence: " + quote(analysis.expected_sequence) + "\n";
  return out;
}

}  // namespace btforge::dataset
