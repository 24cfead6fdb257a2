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

#ifndef BTFORGE_BT_TICK_HPP_
#define BTFORGE_BT_TICK_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "btforge/bt/tree.hpp"

namespace btforge::bt {

class ExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Receives Action and Condition nodes; must return Success or Failure.
using LeafHandler = std::function<TickStatus(const BtNode& leaf)>;

struct TickTrace {
  // (leaf id, returned status) in invocation order.
  std::vector<std::pair<std::string, TickStatus>> calls;
  // Budgets of Timeout decorators as they pass the tick through.
  std::vector<long long> timeout_budgets_msec;

  size_t leaf_calls() const { return calls.size(); }
};

// Called when a Timeout decorator passes the tick to its child.
using TimeoutObserver = std::function<void(const BtNode& timeout_node)>;

// Synchronous depth-first tick. Sequence fails at the first failing child,
// Fallback succeeds at the first succeeding child, RetryUntilSuccessful
// re-evaluates its child up to num_attempts times, Timeout forwards one
// evaluation of its child (symbolic actions take zero time), SubTree
// evaluates the referenced tree. A handler that throws or returns Running
// aborts the tick with ExecutionError.
TickStatus tick(const BehaviorTree& tree, const LeafHandler& handler,
                TickTrace* trace = nullptr,
                const TimeoutObserver& on_timeout = {});

}  // namespace btforge::bt

#endif  // BTFORGE_BT_TICK_HPP_
