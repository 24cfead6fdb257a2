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

#ifndef BTFORGE_DATASET_IMAGE_HPP_
#define BTFORGE_DATASET_IMAGE_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace btforge::dataset {

class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 8-bit RGB raster, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height bytes

  Image() = default;
  Image(int w, int h)
      : width(w), height(h),
        pixels(static_cast<size_t>(w) * static_cast<size_t>(h) * 3, 0) {}

  std::uint8_t* at(int x, int y) {
    return pixels.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
};

// PNG codec; any bit depth / color type is normalized to 8-bit RGB on load.
Image load_png(const std::filesystem::path& path);
void save_png(const Image& image, const std::filesystem::path& path);

// Area-average resampling. Exact box average when the ratio is integral,
// pixel-area weighting otherwise.
Image resize_area(const Image& image, int width, int height);

}  // namespace btforge::dataset

#endif  // BTFORGE_DATASET_IMAGE_HPP_
