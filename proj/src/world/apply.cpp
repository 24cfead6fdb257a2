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

#include "btforge/world/apply.hpp"

namespace btforge::world {

const char* fail_reason_code(FailReason reason) {
  switch (reason) {
    case FailReason::HandsFull: return "HANDS_FULL";
    case FailReason::NotNear: return "NOT_NEAR";
    case FailReason::Occluded: return "OCCLUDED";
    case FailReason::EmptyHand: return "EMPTY_HAND";
    case FailReason::NotASurface: return "NOT_A_SURFACE";
    case FailReason::NotAContainer: return "NOT_A_CONTAINER";
    case FailReason::ClosedContainer: return "CLOSED_CONTAINER";
    case FailReason::NotOpenable: return "NOT_OPENABLE";
    case FailReason::NotToggleable: return "NOT_TOGGLEABLE";
    case FailReason::UnknownObject: return "UNKNOWN_OBJECT";
    case FailReason::UnknownPrimitive: return "UNKNOWN_PRIMITIVE";
    case FailReason::PredicateFalse: return "PREDICATE_FALSE";
  }
  return "?";
}

namespace {

bool is_grasp(std::string_view id) {
  return id == "GRASP" || id == "GRAB" || id == "PICK";
}

// Transitive containment: the object or any container above it is closed.
bool occluded(const WorldState& state, const ObjectRegistry& registry,
              const std::string& obj) {
  std::string current = obj;
  for (size_t depth = 0; depth < registry.objects().size() + 1; ++depth) {
    std::optional<std::string> parent;
    for (const Relation& rel : state.relations) {
      if (rel.kind == RelationKind::Inside && rel.subject == current) {
        parent = rel.reference;
        break;
      }
    }
    if (!parent) return false;
    const ObjectSpec& spec = registry.at(*parent);
    if (spec.openable && state.open_objects.count(*parent) == 0) return true;
    current = *parent;
  }
  return false;
}

ApplyResult do_grasp(const WorldState& state, const ObjectRegistry& registry,
                     const std::string& obj) {
  if (state.held) return ApplyResult::failure(FailReason::HandsFull);
  if (state.robot_near != obj) return ApplyResult::failure(FailReason::NotNear);
  if (occluded(state, registry, obj)) {
    return ApplyResult::failure(FailReason::Occluded);
  }
  WorldState next = state;
  next.erase_relations_of(obj);
  next.held = obj;
  return ApplyResult::success(std::move(next));
}

ApplyResult do_place(const WorldState& state, const ObjectRegistry& registry,
                     const std::string& obj, RelationKind kind) {
  if (!state.held) return ApplyResult::failure(FailReason::EmptyHand);
  if (state.robot_near != obj) return ApplyResult::failure(FailReason::NotNear);
  const ObjectSpec& target = registry.at(obj);
  if (kind == RelationKind::Ontop && !target.surface && !target.container) {
    return ApplyResult::failure(FailReason::NotASurface);
  }
  if (kind == RelationKind::Inside) {
    if (!target.container) {
      return ApplyResult::failure(FailReason::NotAContainer);
    }
    if (target.openable && state.open_objects.count(obj) == 0) {
      return ApplyResult::failure(FailReason::ClosedContainer);
    }
  }
  WorldState next = state;
  std::string placed = *next.held;
  next.held.reset();
  next.relations.insert(Relation{kind, placed, obj});
  if (kind == RelationKind::Nextto) {
    next.relations.insert(Relation{kind, obj, placed});
  }
  return ApplyResult::success(std::move(next));
}

ApplyResult do_open_close(const WorldState& state,
                          const ObjectRegistry& registry,
                          const std::string& obj, bool open) {
  if (state.held) return ApplyResult::failure(FailReason::HandsFull);
  if (state.robot_near != obj) return ApplyResult::failure(FailReason::NotNear);
  if (!registry.at(obj).openable) {
    return ApplyResult::failure(FailReason::NotOpenable);
  }
  WorldState next = state;
  if (open) {
    next.open_objects.insert(obj);  // idempotent
  } else {
    next.open_objects.erase(obj);
  }
  return ApplyResult::success(std::move(next));
}

ApplyResult do_toggle(const WorldState& state, const ObjectRegistry& registry,
                      const std::string& obj, bool on) {
  if (state.robot_near != obj) return ApplyResult::failure(FailReason::NotNear);
  if (!registry.at(obj).toggleable) {
    return ApplyResult::failure(FailReason::NotToggleable);
  }
  WorldState next = state;
  if (on) {
    next.toggled_objects.insert(obj);  // idempotent
  } else {
    next.toggled_objects.erase(obj);
  }
  return ApplyResult::success(std::move(next));
}

}  // namespace

bool has_execution_semantics(std::string_view action_id) {
  return action_id == "NAVIGATE_TO" || is_grasp(action_id) ||
         action_id == "PLACE_ON_TOP" || action_id == "PLACE_INSIDE" ||
         action_id == "PLACE_NEXT_TO" || action_id == "OPEN" ||
         action_id == "CLOSE" || action_id == "TOGGLE_ON" ||
         action_id == "TOGGLE_OFF";
}

ApplyResult apply(const WorldState& state, std::string_view action_id,
                  std::string_view obj, const ObjectRegistry& registry) {
  if (!registry.contains(obj)) {
    return ApplyResult::failure(FailReason::UnknownObject);
  }
  std::string target(obj);

  if (action_id == "NAVIGATE_TO") {
    WorldState next = state;
    next.robot_near = target;
    return ApplyResult::success(std::move(next));
  }
  if (is_grasp(action_id)) return do_grasp(state, registry, target);
  if (action_id == "PLACE_ON_TOP") {
    return do_place(state, registry, target, RelationKind::Ontop);
  }
  if (action_id == "PLACE_INSIDE") {
    return do_place(state, registry, target, RelationKind::Inside);
  }
  if (action_id == "PLACE_NEXT_TO") {
    return do_place(state, registry, target, RelationKind::Nextto);
  }
  if (action_id == "OPEN") return do_open_close(state, registry, target, true);
  if (action_id == "CLOSE") {
    return do_open_close(state, registry, target, false);
  }
  if (action_id == "TOGGLE_ON") return do_toggle(state, registry, target, true);
  if (action_id == "TOGGLE_OFF") {
    return do_toggle(state, registry, target, false);
  }
  return ApplyResult::failure(FailReason::UnknownPrimitive);
}

}  // namespace btforge::world
