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

#include "btforge/dataset/sheet.hpp"

#include <algorithm>

namespace btforge::dataset {

namespace {

constexpr int kGrid = 3;

void blit(Image& dst, const Image& src, int x0, int y0) {
  for (int y = 0; y < src.height; ++y) {
    const std::uint8_t* src_row = src.at(0, y);
    std::uint8_t* dst_row = dst.at(x0, y0 + y);
    std::copy(src_row, src_row + static_cast<size_t>(src.width) * 3, dst_row);
  }
}

}  // namespace

Image contact_sheet(const std::vector<Image>& frames) {
  if (frames.size() != kGrid * kGrid) {
    throw ImageError("WrongFrameCount: a contact sheet needs exactly 9 frames, "
                     "got " + std::to_string(frames.size()));
  }
  int cell_w = 0;
  int cell_h = 0;
  for (const Image& frame : frames) {
    if (frame.width <= 0 || frame.height <= 0) {
      throw ImageError("contact sheet frame is empty");
    }
    cell_w = std::max(cell_w, frame.width);
    cell_h = std::max(cell_h, frame.height);
  }

  Image sheet(cell_w * kGrid, cell_h * kGrid);
  for (size_t i = 0; i < frames.size(); ++i) {
    const Image& frame = frames[i];
    // Scale to fit the cell, preserving the aspect ratio.
    double scale = std::min(static_cast<double>(cell_w) / frame.width,
                            static_cast<double>(cell_h) / frame.height);
    int w = std::max(1, static_cast<int>(frame.width * scale));
    int h = std::max(1, static_cast<int>(frame.height * scale));
    Image scaled = resize_area(frame, w, h);

    int cx = static_cast<int>(i) % kGrid;
    int cy = static_cast<int>(i) / kGrid;
    int x0 = cx * cell_w + (cell_w - w) / 2;
    int y0 = cy * cell_h + (cell_h - h) / 2;
    blit(sheet, scaled, x0, y0);
  }
  return sheet;
}

}  // namespace btforge::dataset
