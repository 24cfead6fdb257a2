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

#include "btforge/dataset/embed.hpp"

#include <cmath>

namespace btforge::dataset {

std::vector<double> grayscale_grid_embedding(const Image& image, int grid) {
  if (grid <= 0) throw ImageError("grid must be positive");
  if (image.width <= 0 || image.height <= 0) {
    throw ImageError("cannot embed an empty image");
  }
  Image small = resize_area(image, grid, grid);

  std::vector<double> vec;
  vec.reserve(static_cast<size_t>(grid) * grid);
  for (int y = 0; y < grid; ++y) {
    for (int x = 0; x < grid; ++x) {
      const std::uint8_t* px = small.at(x, y);
      vec.push_back(0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2]);
    }
  }

  double norm = 0.0;
  for (double v : vec) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& v : vec) v /= norm;
  }
  return vec;
}

}  // namespace btforge::dataset
