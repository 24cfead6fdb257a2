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

#ifndef BTFORGE_WORLD_TASK_HPP_
#define BTFORGE_WORLD_TASK_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "btforge/conformance/library.hpp"
#include "btforge/world/world.hpp"

namespace btforge::world {

// Raised on any task-file schema violation; the message starts with the
// offending field path, e.g. "goal[2].subject: unknown object 'x'".
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Difficulty { Easy, Medium, Hard };
const char* difficulty_name(Difficulty difficulty);

struct TaskBundle {
  std::string task_id;
  Difficulty difficulty = Difficulty::Easy;
  std::string type;  // free-form category, e.g. "Strict ordering"
  std::string instruction;
  ObjectRegistry registry;
  WorldState initial_state;
  GoalSpec goal;
  std::vector<std::string> allowed_actions;
  std::vector<std::string> workflow;  // optional numbered decomposition
};

// Loads and validates a JSON task bundle (schema documented in the README).
// When a library is given, allowed_actions must be a subset of it.
TaskBundle load_task(const std::filesystem::path& path,
                     const conformance::PrimitiveLibrary* library = nullptr);
TaskBundle parse_task(const std::string& text,
                      const conformance::PrimitiveLibrary* library = nullptr);

}  // namespace btforge::world

#endif  // BTFORGE_WORLD_TASK_HPP_
