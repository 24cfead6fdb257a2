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

#include "btforge/dataset/teacher.hpp"

namespace btforge::dataset {

namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string extract_xml_candidate(const std::string& response) {
  size_t begin = response.find("<root");
  size_t end = response.rfind("</root>");
  if (begin == std::string::npos || end == std::string::npos || end < begin) {
    return trim(response);
  }
  return response.substr(begin, end + 7 - begin);
}

TeacherResult teacher_loop(Generator& generator, const std::string& sheet_path,
                           const std::string& instruction,
                           const conformance::PrimitiveLibrary& library,
                           int max_retries) {
  if (max_retries < 1) {
    throw GeneratorError("max_retries must be >= 1");
  }
  std::vector<std::string> library_names;
  for (const conformance::PrimitiveSpec& spec : library.primitives()) {
    library_names.push_back(spec.name);
  }

  GeneratorRequest analysis_request;
  analysis_request.stage = "scene_analysis";
  analysis_request.instruction = instruction;
  if (!sheet_path.empty()) analysis_request.image_paths = {sheet_path};
  analysis_request.library = library_names;

  TeacherResult result;
  result.scene_analysis =
      parse_scene_analysis(generator.generate(analysis_request));

  GeneratorRequest architect_request = analysis_request;
  architect_request.stage = "architect";
  architect_request.scene_analysis = result.scene_analysis;

  conformance::ValidationReport last_report;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::string candidate =
        extract_xml_candidate(generator.generate(architect_request));
    ++result.architect_calls;
    last_report = conformance::validate(candidate, library);
    if (last_report.verdict) {
      result.bt_xml = candidate;
      return result;
    }
  }
  throw RetriesExhausted("architect output failed conformance after " +
                             std::to_string(max_retries) + " attempts",
                         std::move(last_report));
}

}  // namespace btforge::dataset
