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

#ifndef BTFORGE_WORLD_APPLY_HPP_
#define BTFORGE_WORLD_APPLY_HPP_

#include <string_view>

#include "btforge/world/world.hpp"

namespace btforge::world {

enum class FailReason {
  HandsFull,
  NotNear,
  Occluded,
  EmptyHand,
  NotASurface,
  NotAContainer,
  ClosedContainer,
  NotOpenable,
  NotToggleable,
  UnknownObject,
  UnknownPrimitive,
  PredicateFalse,  // only produced by Condition leaves during execution
};

// Stable machine-readable code, e.g. "HANDS_FULL".
const char* fail_reason_code(FailReason reason);

struct ApplyResult {
  bool ok = false;
  WorldState state;        // next state when ok
  FailReason reason = FailReason::UnknownPrimitive;  // valid when !ok

  static ApplyResult success(WorldState next) {
    return {true, std::move(next), FailReason::UnknownPrimitive};
  }
  static ApplyResult failure(FailReason reason) { return {false, {}, reason}; }
};

// Instantaneous state change for one primitive. Preconditions are checked
// in the order listed by the semantics table; the first violated one is
// reported. Never throws: unknown objects and primitives are failures too.
ApplyResult apply(const WorldState& state, std::string_view action_id,
                  std::string_view obj, const ObjectRegistry& registry);

// Every id the symbolic executor has semantics for.
bool has_execution_semantics(std::string_view action_id);

}  // namespace btforge::world

#endif  // BTFORGE_WORLD_APPLY_HPP_
