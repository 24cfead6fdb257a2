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

#include "btforge/bt/tick.hpp"

namespace btforge::bt {

namespace {

class Ticker {
 public:
  Ticker(const BehaviorTree& tree, const LeafHandler& handler,
         TickTrace* trace, const TimeoutObserver& on_timeout)
      : tree_(tree), handler_(handler), trace_(trace),
        on_timeout_(on_timeout) {}

  TickStatus run() { return eval(tree_.main_tree()); }

 private:
  TickStatus eval_leaf(const BtNode& leaf) {
    TickStatus status;
    try {
      status = handler_(leaf);
    } catch (const std::exception& e) {
      throw ExecutionError(std::string("leaf handler failed on '") + leaf.id +
                           "': " + e.what());
    }
    if (status == TickStatus::Running) {
      throw ExecutionError("leaf '" + leaf.id +
                           "' returned Running; symbolic leaves must be "
                           "instantaneous");
    }
    if (trace_ != nullptr) trace_->calls.emplace_back(leaf.id, status);
    return status;
  }

  TickStatus eval(const BtNode& node) {
    switch (node.kind) {
      case NodeKind::Sequence:
        for (const BtNode& child : node.children) {
          if (eval(child) == TickStatus::Failure) return TickStatus::Failure;
        }
        return TickStatus::Success;
      case NodeKind::Fallback:
        for (const BtNode& child : node.children) {
          if (eval(child) == TickStatus::Success) return TickStatus::Success;
        }
        return TickStatus::Failure;
      case NodeKind::RetryUntilSuccessful:
        for (int attempt = 0; attempt < node.num_attempts; ++attempt) {
          if (eval(node.children.front()) == TickStatus::Success) {
            return TickStatus::Success;
          }
        }
        return TickStatus::Failure;
      case NodeKind::Timeout:
        if (trace_ != nullptr) {
          trace_->timeout_budgets_msec.push_back(node.timeout_msec);
        }
        if (on_timeout_) on_timeout_(node);
        return eval(node.children.front());
      case NodeKind::SubTree: {
        const BtNode* target = tree_.find_tree(node.id);
        if (target == nullptr) {
          throw ExecutionError("SubTree references undefined tree '" +
                               node.id + "'");
        }
        return eval(*target);
      }
      case NodeKind::Action:
      case NodeKind::Condition:
        return eval_leaf(node);
    }
    throw ExecutionError("unreachable node kind");
  }

  const BehaviorTree& tree_;
  const LeafHandler& handler_;
  TickTrace* trace_;
  const TimeoutObserver& on_timeout_;
};

}  // namespace

TickStatus tick(const BehaviorTree& tree, const LeafHandler& handler,
                TickTrace* trace, const TimeoutObserver& on_timeout) {
  return Ticker(tree, handler, trace, on_timeout).run();
}

}  // namespace btforge::bt
