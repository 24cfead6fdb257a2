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

#ifndef BTFORGE_BT_SERIALIZE_HPP_
#define BTFORGE_BT_SERIALIZE_HPP_

#include <string>

#include "btforge/bt/tree.hpp"

namespace btforge::bt {

// Canonical serialization: XML declaration, 2-space indent, attribute order
// ID first then alphabetical, double-quoted values, main tree first then the
// remaining trees sorted by id, trailing newline. parse_xml(serialize(t))
// is structurally equal to t and serialize is a fixed point over its own
// output.
std::string serialize(const BehaviorTree& tree);

}  // namespace btforge::bt

#endif  // BTFORGE_BT_SERIALIZE_HPP_
