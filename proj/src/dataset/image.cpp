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

#include "btforge/dataset/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

namespace btforge::dataset {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

Image load_png(const std::filesystem::path& path) {
  FileHandle file(std::fopen(path.c_str(), "rb"));
  if (!file) throw ImageError("cannot open " + path.string());

  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 ||
      png_sig_cmp(header, 0, 8) != 0) {
    throw ImageError("not a PNG file: " + path.string());
  }

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw ImageError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw ImageError("png_create_info_struct failed");
  }

  Image image;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ImageError("corrupt PNG: " + path.string());
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  // Normalize every color type / bit depth to 8-bit RGB.
  png_byte color_type = png_get_color_type(png, info);
  png_byte bit_depth = png_get_bit_depth(png, info);
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY ||
      color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  image.width = static_cast<int>(png_get_image_width(png, info));
  image.height = static_cast<int>(png_get_image_height(png, info));
  image.pixels.resize(static_cast<size_t>(image.width) * image.height * 3);

  rows.resize(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = image.pixels.data() + static_cast<size_t>(y) * image.width * 3;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

void save_png(const Image& image, const std::filesystem::path& path) {
  if (image.width <= 0 || image.height <= 0 ||
      image.pixels.size() !=
          static_cast<size_t>(image.width) * image.height * 3) {
    throw ImageError("cannot save an empty or inconsistent image");
  }
  FileHandle file(std::fopen(path.c_str(), "wb"));
  if (!file) throw ImageError("cannot write " + path.string());

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw ImageError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw ImageError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw ImageError("PNG write failed: " + path.string());
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < image.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(image.at(0, y)));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image resize_area(const Image& image, int width, int height) {
  if (width <= 0 || height <= 0) {
    throw ImageError("target size must be positive");
  }
  if (image.width == width && image.height == height) return image;

  Image out(width, height);
  double x_scale = static_cast<double>(image.width) / width;
  double y_scale = static_cast<double>(image.height) / height;

  for (int oy = 0; oy < height; ++oy) {
    double y0 = oy * y_scale;
    double y1 = (oy + 1) * y_scale;
    for (int ox = 0; ox < width; ++ox) {
      double x0 = ox * x_scale;
      double x1 = (ox + 1) * x_scale;

      double sum[3] = {0.0, 0.0, 0.0};
      double area = 0.0;
      for (int sy = static_cast<int>(y0); sy < image.height && sy < y1; ++sy) {
        double hy = std::min<double>(sy + 1, y1) - std::max<double>(sy, y0);
        if (hy <= 0.0) continue;
        for (int sx = static_cast<int>(x0); sx < image.width && sx < x1; ++sx) {
          double wx = std::min<double>(sx + 1, x1) - std::max<double>(sx, x0);
          if (wx <= 0.0) continue;
          const std::uint8_t* px = image.at(sx, sy);
          double weight = wx * hy;
          sum[0] += weight * px[0];
          sum[1] += weight * px[1];
          sum[2] += weight * px[2];
          area += weight;
        }
      }
      std::uint8_t* dst = out.at(ox, oy);
      for (int c = 0; c < 3; ++c) {
        double value = area > 0.0 ? sum[c] / area : 0.0;
        dst[c] = static_cast<std::uint8_t>(std::lround(value));
      }
    }
  }
  return out;
}

}  // namespace btforge::dataset
