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

#ifndef BTFORGE_DATASET_TEACHER_HPP_
#define BTFORGE_DATASET_TEACHER_HPP_

#include <string>
#include <vector>

#include "btforge/conformance/validate.hpp"
#include "btforge/dataset/generator.hpp"
#include "btforge/dataset/scene_analysis.hpp"

namespace btforge::dataset {

class RetriesExhausted : public std::runtime_error {
 public:
  RetriesExhausted(const std::string& what,
                   conformance::ValidationReport last_report)
      : std::runtime_error(what), last_report(std::move(last_report)) {}

  conformance::ValidationReport last_report;
};

struct TeacherResult {
  SceneAnalysis scene_analysis;
  std::string bt_xml;  // conforming architect output, verbatim
  int architect_calls = 0;
};

// Isolates the XML document from a raw model response (first "<root" up to
// the matching "</root>"); returns the trimmed response when no such span
// exists.
std::string extract_xml_candidate(const std::string& response);

// Two-stage teacher call: one scene-analysis request, then architect
// requests re-issued until the output passes conformance against the
// library, at most max_retries times. Throws MalformedSceneAnalysis,
// GeneratorError, or RetriesExhausted carrying the last report.
TeacherResult teacher_loop(Generator& generator, const std::string& sheet_path,
                           const std::string& instruction,
                           const conformance::PrimitiveLibrary& library,
                           int max_retries);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_TEACHER_HPP_
