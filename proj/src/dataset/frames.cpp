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

#include "btforge/dataset/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace btforge::dataset {

std::vector<size_t> stride_subsample_indices(size_t frame_count,
                                             size_t stride) {
  if (stride == 0) throw FrameSelectionError("stride must be >= 1");
  std::vector<size_t> indices;
  for (size_t i = 0; i < frame_count; i += stride) indices.push_back(i);
  return indices;
}

double vector_distance(const std::vector<double>& a,
                       const std::vector<double>& b, DistanceMetric metric) {
  if (a.size() != b.size()) {
    throw FrameSelectionError("DimensionMismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
  }
  if (metric == DistanceMetric::Euclidean) {
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      double d = a[i] - b[i];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  // Cosine distance: 1 - cos similarity; zero vectors are maximally distant
  // from everything except another zero vector.
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (norm_a == 0.0 && norm_b == 0.0) return 0.0;
  if (norm_a == 0.0 || norm_b == 0.0) return 1.0;
  return 1.0 - dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

std::vector<size_t> kcenter_greedy(
    const std::vector<std::vector<double>>& vectors, size_t k,
    size_t seed_index, DistanceMetric metric) {
  if (k == 0) return {};
  if (k > vectors.size()) {
    throw FrameSelectionError("KTooLarge: k=" + std::to_string(k) + " > n=" +
                              std::to_string(vectors.size()));
  }
  if (seed_index >= vectors.size()) {
    throw FrameSelectionError("seed_index out of range");
  }

  std::vector<size_t> selected = {seed_index};
  std::vector<double> min_dist(vectors.size(),
                               std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < vectors.size(); ++i) {
    min_dist[i] = vector_distance(vectors[i], vectors[seed_index], metric);
  }

  while (selected.size() < k) {
    size_t best = vectors.size();
    double best_dist = -1.0;
    for (size_t i = 0; i < vectors.size(); ++i) {
      if (std::find(selected.begin(), selected.end(), i) != selected.end()) {
        continue;
      }
      if (min_dist[i] > best_dist) {
        best_dist = min_dist[i];
        best = i;
      }
    }
    selected.push_back(best);
    for (size_t i = 0; i < vectors.size(); ++i) {
      min_dist[i] =
          std::min(min_dist[i], vector_distance(vectors[i], vectors[best], metric));
    }
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

double coverage_radius(const std::vector<std::vector<double>>& vectors,
                       const std::vector<size_t>& selected,
                       DistanceMetric metric) {
  double radius = 0.0;
  for (const std::vector<double>& v : vectors) {
    double nearest = std::numeric_limits<double>::infinity();
    for (size_t index : selected) {
      nearest = std::min(nearest, vector_distance(v, vectors[index], metric));
    }
    radius = std::max(radius, nearest);
  }
  return radius;
}

}  // namespace btforge::dataset
