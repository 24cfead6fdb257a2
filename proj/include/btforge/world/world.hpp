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

#ifndef BTFORGE_WORLD_WORLD_HPP_
#define BTFORGE_WORLD_WORLD_HPP_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace btforge::world {

class WorldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownObjectError : public WorldError {
 public:
  using WorldError::WorldError;
};

struct ObjectSpec {
  std::string id;
  bool openable = false;
  bool toggleable = false;
  bool container = false;
  bool surface = false;
  bool initially_open = false;
};

class ObjectRegistry {
 public:
  void add(ObjectSpec spec);
  bool contains(std::string_view id) const;
  const ObjectSpec& at(std::string_view id) const;  // throws UnknownObjectError
  const std::map<std::string, ObjectSpec>& objects() const { return objects_; }

 private:
  std::map<std::string, ObjectSpec> objects_;
};

enum class RelationKind { Inside, Ontop, Nextto };
const char* relation_kind_name(RelationKind kind);
std::optional<RelationKind> relation_kind_from_name(std::string_view name);

struct Relation {
  RelationKind kind;
  std::string subject;
  std::string reference;

  auto operator<=>(const Relation&) const = default;
};

// Symbolic scene: robot proximity, single gripper, object states and
// spatial relations. nextto is stored in both directions.
struct WorldState {
  std::optional<std::string> robot_near;
  std::optional<std::string> held;
  std::set<std::string> open_objects;
  std::set<std::string> toggled_objects;
  std::set<Relation> relations;

  bool has_relation(RelationKind kind, std::string_view subject,
                    std::string_view reference) const;
  // Direct inside/ontop parent, if any.
  std::optional<std::string> parent_of(std::string_view subject) const;
  void erase_relations_of(std::string_view object);

  bool operator==(const WorldState&) const = default;
};

// Checks the WorldState representation invariants against a registry:
// held object out of all relations, open/toggled sets restricted to
// openable/toggleable objects, at most one inside/ontop parent, symmetric
// nextto storage. Throws WorldError on violation.
void check_state_invariants(const WorldState& state,
                            const ObjectRegistry& registry);

enum class PredicateKind { Inside, Ontop, Nextto, Open, ToggledOn };
const char* predicate_kind_name(PredicateKind kind);
std::optional<PredicateKind> predicate_kind_from_name(std::string_view name);
bool predicate_is_binary(PredicateKind kind);

struct GoalPredicate {
  bool negated = false;
  PredicateKind kind = PredicateKind::Inside;
  std::string subject;
  std::string reference;  // empty for unary kinds
};

// Conjunction of possibly negated predicates; all-or-nothing satisfaction.
struct GoalSpec {
  std::vector<GoalPredicate> predicates;
};

bool holds(const WorldState& state, const GoalPredicate& predicate,
           const ObjectRegistry& registry);

// True iff every predicate of the conjunction holds; no partial credit.
bool check_goals(const WorldState& state, const GoalSpec& goal,
                 const ObjectRegistry& registry);

}  // namespace btforge::world

#endif  // BTFORGE_WORLD_WORLD_HPP_
