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

#include "btforge/world/world.hpp"

#include <algorithm>

namespace btforge::world {

void ObjectRegistry::add(ObjectSpec spec) {
  if (spec.id.empty()) throw WorldError("object id cannot be empty");
  if (spec.initially_open && !spec.openable) {
    throw WorldError("object '" + spec.id +
                     "' is initially_open but not openable");
  }
  if (!objects_.emplace(spec.id, spec).second) {
    throw WorldError("duplicate object id '" + spec.id + "'");
  }
}

bool ObjectRegistry::contains(std::string_view id) const {
  return objects_.count(std::string(id)) != 0;
}

const ObjectSpec& ObjectRegistry::at(std::string_view id) const {
  auto it = objects_.find(std::string(id));
  if (it == objects_.end()) {
    throw UnknownObjectError("unknown object '" + std::string(id) + "'");
  }
  return it->second;
}

const char* relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Inside: return "inside";
    case RelationKind::Ontop: return "ontop";
    case RelationKind::Nextto: return "nextto";
  }
  return "?";
}

std::optional<RelationKind> relation_kind_from_name(std::string_view name) {
  if (name == "inside") return RelationKind::Inside;
  if (name == "ontop") return RelationKind::Ontop;
  if (name == "nextto") return RelationKind::Nextto;
  return std::nullopt;
}

bool WorldState::has_relation(RelationKind kind, std::string_view subject,
                              std::string_view reference) const {
  return relations.count(Relation{kind, std::string(subject),
                                  std::string(reference)}) != 0;
}

std::optional<std::string> WorldState::parent_of(
    std::string_view subject) const {
  for (const Relation& rel : relations) {
    if (rel.subject == subject &&
        (rel.kind == RelationKind::Inside || rel.kind == RelationKind::Ontop)) {
      return rel.reference;
    }
  }
  return std::nullopt;
}

void WorldState::erase_relations_of(std::string_view object) {
  for (auto it = relations.begin(); it != relations.end();) {
    if (it->subject == object || (it->kind == RelationKind::Nextto &&
                                  it->reference == object)) {
      it = relations.erase(it);
    } else {
      ++it;
    }
  }
}

void check_state_invariants(const WorldState& state,
                            const ObjectRegistry& registry) {
  if (state.robot_near) registry.at(*state.robot_near);
  if (state.held) registry.at(*state.held);

  for (const std::string& id : state.open_objects) {
    if (!registry.at(id).openable) {
      throw WorldError("open set contains non-openable '" + id + "'");
    }
  }
  for (const std::string& id : state.toggled_objects) {
    if (!registry.at(id).toggleable) {
      throw WorldError("toggled set contains non-toggleable '" + id + "'");
    }
  }

  std::map<std::string, int> parents;
  for (const Relation& rel : state.relations) {
    registry.at(rel.subject);
    registry.at(rel.reference);
    if (state.held && (rel.subject == *state.held ||
                       (rel.kind == RelationKind::Nextto &&
                        rel.reference == *state.held))) {
      throw WorldError("held object '" + *state.held +
                       "' participates in a spatial relation");
    }
    if (rel.kind == RelationKind::Inside || rel.kind == RelationKind::Ontop) {
      if (++parents[rel.subject] > 1) {
        throw WorldError("object '" + rel.subject +
                         "' has more than one inside/ontop parent");
      }
    }
    if (rel.kind == RelationKind::Nextto &&
        !state.has_relation(RelationKind::Nextto, rel.reference, rel.subject)) {
      throw WorldError("nextto(" + rel.subject + ", " + rel.reference +
                       ") lacks its mirror");
    }
  }
}

const char* predicate_kind_name(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::Inside: return "inside";
    case PredicateKind::Ontop: return "ontop";
    case PredicateKind::Nextto: return "nextto";
    case PredicateKind::Open: return "open";
    case PredicateKind::ToggledOn: return "toggled_on";
  }
  return "?";
}

std::optional<PredicateKind> predicate_kind_from_name(std::string_view name) {
  if (name == "inside") return PredicateKind::Inside;
  if (name == "ontop") return PredicateKind::Ontop;
  if (name == "nextto") return PredicateKind::Nextto;
  if (name == "open") return PredicateKind::Open;
  if (name == "toggled_on") return PredicateKind::ToggledOn;
  return std::nullopt;
}

bool predicate_is_binary(PredicateKind kind) {
  return kind == PredicateKind::Inside || kind == PredicateKind::Ontop ||
         kind == PredicateKind::Nextto;
}

bool holds(const WorldState& state, const GoalPredicate& predicate,
           const ObjectRegistry& registry) {
  registry.at(predicate.subject);
  if (predicate_is_binary(predicate.kind)) registry.at(predicate.reference);

  bool value = false;
  switch (predicate.kind) {
    case PredicateKind::Inside:
      value = state.has_relation(RelationKind::Inside, predicate.subject,
                                 predicate.reference);
      break;
    case PredicateKind::Ontop:
      value = state.has_relation(RelationKind::Ontop, predicate.subject,
                                 predicate.reference);
      break;
    case PredicateKind::Nextto:
      value = state.has_relation(RelationKind::Nextto, predicate.subject,
                                 predicate.reference) ||
              state.has_relation(RelationKind::Nextto, predicate.reference,
                                 predicate.subject);
      break;
    case PredicateKind::Open:
      value = state.open_objects.count(predicate.subject) != 0;
      break;
    case PredicateKind::ToggledOn:
      value = state.toggled_objects.count(predicate.subject) != 0;
      break;
  }
  return predicate.negated ? !value : value;
}

bool check_goals(const WorldState& state, const GoalSpec& goal,
                 const ObjectRegistry& registry) {
  return std::all_of(goal.predicates.begin(), goal.predicates.end(),
                     [&](const GoalPredicate& p) {
                       return holds(state, p, registry);
                     });
}

}  // namespace btforge::world
