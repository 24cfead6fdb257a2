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

#ifndef BTFORGE_DATASET_FRAMES_HPP_
#define BTFORGE_DATASET_FRAMES_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace btforge::dataset {

class FrameSelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Indices 0, stride, 2*stride, ... below frame_count; stride >= 1.
std::vector<size_t> stride_subsample_indices(size_t frame_count, size_t stride);

enum class DistanceMetric { Euclidean, Cosine };

// Greedy farthest-point selection: start from seed_index, then repeatedly
// pick the point maximizing its minimum distance to the selected set
// (lowest index wins ties). The result is sorted ascending, i.e. back into
// temporal order. Throws on k > |vectors|, mismatched dimensions or an
// out-of-range seed.
std::vector<size_t> kcenter_greedy(
    const std::vector<std::vector<double>>& vectors, size_t k,
    size_t seed_index = 0, DistanceMetric metric = DistanceMetric::Euclidean);

double vector_distance(const std::vector<double>& a,
                       const std::vector<double>& b, DistanceMetric metric);

// max over points of min distance to the selected set.
double coverage_radius(const std::vector<std::vector<double>>& vectors,
                       const std::vector<size_t>& selected,
                       DistanceMetric metric = DistanceMetric::Euclidean);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_FRAMES_HPP_
