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

#ifndef BTFORGE_DATASET_GENERATOR_HPP_
#define BTFORGE_DATASET_GENERATOR_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btforge/dataset/scene_analysis.hpp"

namespace btforge::dataset {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One call of the teacher protocol. Serialized as a single JSON object:
// {stage, instruction, image_paths[], scene_analysis?, library[]}.
struct GeneratorRequest {
  std::string stage;  // "scene_analysis" | "architect"
  std::string instruction;
  std::vector<std::string> image_paths;
  std::optional<SceneAnalysis> scene_analysis;  // architect stage only
  std::vector<std::string> library;

  std::string to_json() const;
};

// Text-in/text-out generator handle standing in for the external model.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual std::string generate(const GeneratorRequest& request) = 0;
};

// Pipes the request JSON to `command` (run through /bin/sh) on stdin and
// returns its stdout. A nonzero exit status raises GeneratorError.
class CommandGenerator : public Generator {
 public:
  explicit CommandGenerator(std::string command);
  std::string generate(const GeneratorRequest& request) override;

 private:
  std::string command_;
};

// POSTs the request JSON to `url` (http:// only) and returns the body.
class HttpGenerator : public Generator {
 public:
  explicit HttpGenerator(std::string url);
  std::string generate(const GeneratorRequest& request) override;

 private:
  std::string host_;
  int port_ = 80;
  std::string path_;
};

// Deterministic offline stand-in for the teacher model. Scene analysis is
// templated from the instruction; the plan is read off the instruction
// (trailing numbered "N. ACTION object" workflow lines when present,
// otherwise a "move <obj> to <dest>" / "put <obj> in <dest>" pattern).
class TemplateMockGenerator : public Generator {
 public:
  std::string generate(const GeneratorRequest& request) override;
};

std::unique_ptr<Generator> make_command_generator(const std::string& command);
std::unique_ptr<Generator> make_http_generator(const std::string& url);
std::unique_ptr<Generator> make_mock_generator();

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_GENERATOR_HPP_
