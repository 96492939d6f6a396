#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cavlab/tensor.hpp"

namespace cavlab {

// Grayscale image, row-major, intensities in [0,1].
struct Image {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;

  Image() = default;
  Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0.0f) {}

  std::size_t size() const { return pixels.size(); }
  float& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  float at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  // Flattened [1, w*h] view for the dense models.
  Tensor as_row() const;
  static Image from_row(const Tensor& row, int width, int height);
};

// Binary mask over the same grid; 1 = inside.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> on;

  Mask() = default;
  Mask(int w, int h) : width(w), height(h), on(static_cast<std::size_t>(w) * h, 0) {}

  std::size_t area() const;
  bool empty_mask() const { return area() == 0; }
  std::uint8_t& at(int x, int y) { return on[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return on[static_cast<std::size_t>(y) * width + x]; }
};

// Binary P5 PGM, maxval 255. Images store round(255 * intensity); masks store
// 0/255. Readers reject anything that is not 8-bit P5.
void write_pgm(const std::filesystem::path& path, const Image& img);
Image read_pgm(const std::filesystem::path& path);
void write_mask_pgm(const std::filesystem::path& path, const Mask& mask);
Mask read_mask_pgm(const std::filesystem::path& path);

}  // namespace cavlab
