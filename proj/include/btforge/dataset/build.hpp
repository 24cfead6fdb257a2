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

#ifndef BTFORGE_DATASET_BUILD_HPP_
#define BTFORGE_DATASET_BUILD_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "btforge/conformance/library.hpp"
#include "btforge/dataset/augment.hpp"
#include "btforge/dataset/frames.hpp"
#include "btforge/dataset/generator.hpp"
#include "btforge/dataset/record.hpp"

namespace btforge::dataset {

class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One episode directory: frame_%06d.png files, a `meta` JSON file with the
// instruction (and optional per-frame timestamps), and an optional
// `embeddings.csv` sidecar with one comma-separated row per frame.
struct EpisodeSource {
  std::string episode_id;
  std::filesystem::path directory;
  std::vector<std::filesystem::path> frames;  // temporal order
  std::vector<double> timestamps;             // frame index when absent
  std::string instruction;
  std::optional<std::vector<std::vector<double>>> embeddings;
};

// Scans a source root (one subdirectory per episode), sorted by episode id.
std::vector<EpisodeSource> scan_sources(const std::filesystem::path& root);

struct BuildConfig {
  size_t stride = 10;
  size_t sheet_frames = 9;
  double structural_fraction = 0.5;
  double lexical_probability = 0.5;
  double eval_fraction = 0.1;
  std::uint64_t seed = 0;
  int max_retries = 3;
  DistanceMetric metric = DistanceMetric::Euclidean;
};

struct BuildReport {
  size_t base_records = 0;
  size_t structural_records = 0;
  size_t total_records = 0;
  size_t train_records = 0;
  size_t eval_records = 0;
  std::vector<std::string> failures;  // "episode_id: reason"
  std::filesystem::path manifest_path;
};

// Runs the full construction pipeline into out_dir: frame selection and
// contact sheets, the teacher loop, structural augmentation of the
// configured fraction, lexical augmentation of the whole set, train/eval
// split, record store and line-delimited manifest. Per-episode failures are
// logged in the report and skipped. Deterministic for a fixed seed and a
// deterministic generator: per-record rng streams are derived from
// (seed, record id), so output bytes do not depend on scheduling.
BuildReport build_dataset(const std::vector<EpisodeSource>& sources,
                          const BuildConfig& config, Generator& generator,
                          const conformance::PrimitiveLibrary& library,
                          const SynonymMap& synonyms,
                          const std::filesystem::path& out_dir);

// Post-hoc store check: every record parses, passes conformance against the
// library, and uses only actions from its own allowed list. Returns
// human-readable violations, empty when the store is consistent.
std::vector<std::string> verify_store(const std::filesystem::path& out_dir,
                                      const conformance::PrimitiveLibrary& library);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_BUILD_HPP_
