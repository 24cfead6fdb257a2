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

#ifndef BTFORGE_DATASET_EMBED_HPP_
#define BTFORGE_DATASET_EMBED_HPP_

#include <vector>

#include "btforge/dataset/image.hpp"

namespace btforge::dataset {

// Built-in frame embedder used when no embedding sidecar is supplied:
// Rec.601 grayscale, area-downsample to grid x grid, flatten row-major,
// L2-normalize (the zero vector stays zero). Identical images yield
// identical vectors.
std::vector<double> grayscale_grid_embedding(const Image& image, int grid = 16);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_EMBED_HPP_
