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

#ifndef BTFORGE_DATASET_SHEET_HPP_
#define BTFORGE_DATASET_SHEET_HPP_

#include <vector>

#include "btforge/dataset/image.hpp"

namespace btforge::dataset {

// Row-major 3x3 grid over exactly nine temporally sorted frames (top-left is
// the earliest). Cell size is the maximum frame width x height; smaller or
// differently shaped frames are scaled to fit and letterboxed on black, so
// nothing is distorted. Output is 3x cell width by 3x cell height.
Image contact_sheet(const std::vector<Image>& frames);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_SHEET_HPP_
