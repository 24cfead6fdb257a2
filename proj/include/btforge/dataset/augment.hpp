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

#ifndef BTFORGE_DATASET_AUGMENT_HPP_
#define BTFORGE_DATASET_AUGMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "btforge/conformance/library.hpp"
#include "btforge/dataset/record.hpp"

namespace btforge::dataset {

class AugmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoPriorGrasp : public AugmentError {
 public:
  using AugmentError::AugmentError;
};

// Distinct Action primitives of a conforming tree in first-appearance
// order; this is the allowed-actions list A of the student prompt.
std::vector<std::string> derive_allowed_actions(std::string_view bt_xml);

struct AugmentConstruct {
  enum class Kind { Retry, Timeout, Fallback };
  Kind kind = Kind::Retry;
  int retry_attempts = 3;       // Kind::Retry
  long long timeout_msec = 5000;  // Kind::Timeout

  static AugmentConstruct retry(int attempts) {
    return {Kind::Retry, attempts, 0};
  }
  static AugmentConstruct timeout(long long msec) {
    return {Kind::Timeout, 0, msec};
  }
  static AugmentConstruct fallback() { return {Kind::Fallback, 0, 0}; }
};

// Wraps the action_index-th Action occurrence (document order) in the
// requested control-flow construct and appends the matching template clause
// to the instruction. The fallback construct adds a recovery branch that
// re-navigates to the object and retries the action. allowed_actions is
// re-derived from the resulting XML. Throws AugmentError on a bad target.
EpisodeRecord structural_augment(const EpisodeRecord& record,
                                 const AugmentConstruct& construct,
                                 size_t action_index);

// Synonym groups; any member may replace any other member of its group.
class SynonymMap {
 public:
  // GRASP <-> {GRAB, PICK}.
  static SynonymMap default_map();
  // One group per line: NAME NAME [NAME...]. '#' comments and blanks
  // skipped. Every name must belong to the library.
  static SynonymMap load(const std::filesystem::path& path,
                         const conformance::PrimitiveLibrary& library);
  static SynonymMap parse(std::string_view text,
                          const conformance::PrimitiveLibrary& library);

  void add_group(std::vector<std::string> group);
  // Group containing `name`, or nullptr.
  const std::vector<std::string>* group_of(std::string_view name) const;
  const std::vector<std::vector<std::string>>& groups() const {
    return groups_;
  }

 private:
  std::vector<std::vector<std::string>> groups_;
};

// Per distinct eligible primitive (first-appearance order), a
// Bernoulli(probability) draw decides replacement by a uniformly chosen
// synonym, applied to every occurrence. Then, per placement-action
// occurrence (document order), an independent Bernoulli(probability) draw
// adds an explicit `item` attribute naming the object of the most recent
// grasp in tree order; NoPriorGrasp is raised when the draw requests the
// variant and no grasp precedes the placement. XML and allowed_actions are
// updated together.
EpisodeRecord lexical_augment(const EpisodeRecord& record,
                              const SynonymMap& synonyms, double probability,
                              std::uint64_t seed);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_AUGMENT_HPP_
