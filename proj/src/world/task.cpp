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

#include "btforge/world/task.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace btforge::world {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

const json& member(const json& obj, const std::string& parent,
                   const char* key, bool required = true) {
  static const json null_value;
  if (!obj.is_object()) fail(parent, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) fail(parent.empty() ? key : parent + "." + key, "missing");
    return null_value;
  }
  return *it;
}

std::string as_string(const json& value, const std::string& path,
                      bool allow_empty = false) {
  if (!value.is_string()) fail(path, "expected a string");
  std::string out = value.get<std::string>();
  if (out.empty() && !allow_empty) fail(path, "must be non-empty");
  return out;
}

bool as_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) fail(path, "expected a boolean");
  return value.get<bool>();
}

void require_object(const json& value, const ObjectRegistry& registry,
                    const std::string& path, const std::string& id) {
  (void)value;
  if (!registry.contains(id)) fail(path, "unknown object '" + id + "'");
}

}  // namespace

const char* difficulty_name(Difficulty difficulty) {
  switch (difficulty) {
    case Difficulty::Easy: return "Easy";
    case Difficulty::Medium: return "Medium";
    case Difficulty::Hard: return "Hard";
  }
  return "?";
}

TaskBundle parse_task(const std::string& text,
                      const conformance::PrimitiveLibrary* library) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("(document): not valid JSON: ") + e.what());
  }

  TaskBundle task;
  task.task_id = as_string(member(doc, "", "task_id"), "task_id");
  task.instruction = as_string(member(doc, "", "instruction"), "instruction");

  std::string difficulty =
      as_string(member(doc, "", "difficulty"), "difficulty");
  if (difficulty == "Easy") {
    task.difficulty = Difficulty::Easy;
  } else if (difficulty == "Medium") {
    task.difficulty = Difficulty::Medium;
  } else if (difficulty == "Hard") {
    task.difficulty = Difficulty::Hard;
  } else {
    fail("difficulty", "must be Easy, Medium or Hard, got '" + difficulty + "'");
  }
  if (doc.contains("type")) task.type = as_string(doc["type"], "type");

  // objects[]
  const json& objects = member(doc, "", "objects");
  if (!objects.is_array() || objects.empty()) {
    fail("objects", "expected a non-empty array");
  }
  for (size_t i = 0; i < objects.size(); ++i) {
    const std::string path = "objects[" + std::to_string(i) + "]";
    const json& entry = objects[i];
    ObjectSpec spec;
    spec.id = as_string(member(entry, path, "id"), path + ".id");
    for (const char* flag :
         {"openable", "toggleable", "container", "surface", "initially_open"}) {
      if (entry.contains(flag)) {
        bool value = as_bool(entry[flag], path + "." + flag);
        if (std::string_view(flag) == "openable") spec.openable = value;
        if (std::string_view(flag) == "toggleable") spec.toggleable = value;
        if (std::string_view(flag) == "container") spec.container = value;
        if (std::string_view(flag) == "surface") spec.surface = value;
        if (std::string_view(flag) == "initially_open") {
          spec.initially_open = value;
        }
      }
    }
    if (spec.initially_open && !spec.openable) {
      fail(path, "'" + spec.id + "' is initially_open but not openable");
    }
    try {
      task.registry.add(spec);
    } catch (const WorldError& e) {
      fail(path, e.what());
    }
  }

  // initial_state
  const json& initial = member(doc, "", "initial_state", /*required=*/false);
  if (!initial.is_null()) {
    if (!initial.is_object()) fail("initial_state", "expected an object");
    if (initial.contains("near") && !initial["near"].is_null()) {
      std::string id = as_string(initial["near"], "initial_state.near");
      require_object(initial, task.registry, "initial_state.near", id);
      task.initial_state.robot_near = id;
    }
    if (initial.contains("held") && !initial["held"].is_null()) {
      std::string id = as_string(initial["held"], "initial_state.held");
      require_object(initial, task.registry, "initial_state.held", id);
      task.initial_state.held = id;
    }
    if (initial.contains("open")) {
      const json& open = initial["open"];
      if (!open.is_array()) fail("initial_state.open", "expected an array");
      for (size_t i = 0; i < open.size(); ++i) {
        const std::string path = "initial_state.open[" + std::to_string(i) + "]";
        std::string id = as_string(open[i], path);
        require_object(initial, task.registry, path, id);
        if (!task.registry.at(id).openable) {
          fail(path, "'" + id + "' is not openable");
        }
        task.initial_state.open_objects.insert(id);
      }
    }
    if (initial.contains("toggled")) {
      const json& toggled = initial["toggled"];
      if (!toggled.is_array()) {
        fail("initial_state.toggled", "expected an array");
      }
      for (size_t i = 0; i < toggled.size(); ++i) {
        const std::string path =
            "initial_state.toggled[" + std::to_string(i) + "]";
        std::string id = as_string(toggled[i], path);
        require_object(initial, task.registry, path, id);
        if (!task.registry.at(id).toggleable) {
          fail(path, "'" + id + "' is not toggleable");
        }
        task.initial_state.toggled_objects.insert(id);
      }
    }
    if (initial.contains("relations")) {
      const json& relations = initial["relations"];
      if (!relations.is_array()) {
        fail("initial_state.relations", "expected an array");
      }
      for (size_t i = 0; i < relations.size(); ++i) {
        const std::string path =
            "initial_state.relations[" + std::to_string(i) + "]";
        const json& entry = relations[i];
        std::string kind_name =
            as_string(member(entry, path, "kind"), path + ".kind");
        auto kind = relation_kind_from_name(kind_name);
        if (!kind) fail(path + ".kind", "unknown relation '" + kind_name + "'");
        std::string subject =
            as_string(member(entry, path, "subject"), path + ".subject");
        std::string reference =
            as_string(member(entry, path, "reference"), path + ".reference");
        require_object(entry, task.registry, path + ".subject", subject);
        require_object(entry, task.registry, path + ".reference", reference);
        task.initial_state.relations.insert(Relation{*kind, subject, reference});
        if (*kind == RelationKind::Nextto) {
          task.initial_state.relations.insert(
              Relation{*kind, reference, subject});
        }
      }
    }
  }
  // Objects flagged initially_open start open as well.
  for (const auto& [id, spec] : task.registry.objects()) {
    if (spec.initially_open) task.initial_state.open_objects.insert(id);
  }
  try {
    check_state_invariants(task.initial_state, task.registry);
  } catch (const WorldError& e) {
    fail("initial_state", e.what());
  }

  // goal[]
  const json& goal = member(doc, "", "goal");
  if (!goal.is_array()) fail("goal", "expected an array");
  for (size_t i = 0; i < goal.size(); ++i) {
    const std::string path = "goal[" + std::to_string(i) + "]";
    const json& entry = goal[i];
    GoalPredicate predicate;
    if (entry.contains("not")) {
      predicate.negated = as_bool(entry["not"], path + ".not");
    }
    std::string kind_name =
        as_string(member(entry, path, "kind"), path + ".kind");
    auto kind = predicate_kind_from_name(kind_name);
    if (!kind) fail(path + ".kind", "unknown predicate '" + kind_name + "'");
    predicate.kind = *kind;
    predicate.subject =
        as_string(member(entry, path, "subject"), path + ".subject");
    require_object(entry, task.registry, path + ".subject", predicate.subject);
    if (predicate_is_binary(*kind)) {
      predicate.reference =
          as_string(member(entry, path, "reference"), path + ".reference");
      require_object(entry, task.registry, path + ".reference",
                     predicate.reference);
    } else if (entry.contains("reference")) {
      fail(path + ".reference", "unary predicates take no reference");
    }
    task.goal.predicates.push_back(std::move(predicate));
  }

  // allowed_actions[]
  const json& allowed = member(doc, "", "allowed_actions");
  if (!allowed.is_array() || allowed.empty()) {
    fail("allowed_actions", "expected a non-empty array");
  }
  for (size_t i = 0; i < allowed.size(); ++i) {
    const std::string path = "allowed_actions[" + std::to_string(i) + "]";
    std::string name = as_string(allowed[i], path);
    if (library != nullptr && !library->contains(name)) {
      fail(path, "'" + name + "' is not in the primitive library");
    }
    task.allowed_actions.push_back(std::move(name));
  }

  // workflow[] (optional)
  if (doc.contains("workflow")) {
    const json& workflow = doc["workflow"];
    if (!workflow.is_array()) fail("workflow", "expected an array");
    for (size_t i = 0; i < workflow.size(); ++i) {
      task.workflow.push_back(
          as_string(workflow[i], "workflow[" + std::to_string(i) + "]"));
    }
  }
  return task;
}

TaskBundle load_task(const std::filesystem::path& path,
                     const conformance::PrimitiveLibrary* library) {
  std::ifstream in(path);
  if (!in) throw SchemaError("(file): cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_task(buffer.str(), library);
  } catch (const SchemaError& e) {
    throw SchemaError(path.filename().string() + ": " + e.what());
  }
}

}  // namespace btforge::world
