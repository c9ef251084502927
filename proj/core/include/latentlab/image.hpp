// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_IMAGE_HPP_
#define LATENTLAB_IMAGE_HPP_

#include <cstddef>
#include <vector>

namespace latentlab {

/// Planar (channel-major) float image. Generators produce values in [-1, 1];
/// losses and metrics operate on [0, 1]. Conversions happen explicitly at
/// that boundary, never implicitly.
struct Image {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;  // size channels*height*width, [c][y][x]

  Image() = default;
  Image(int channels, int height, int width, double fill = 0.0)
      : channels(channels),
        height(height),
        width(width),
        data(static_cast<std::size_t>(channels) * height * width, fill) {}

  double& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }

  double* plane(int c) {
    return data.data() + static_cast<std::size_t>(c) * height * width;
  }
  const double* plane(int c) const {
    return data.data() + static_cast<std::size_t>(c) * height * width;
  }

  std::size_t size() const { return data.size(); }
  bool same_shape(const Image& other) const {
    return channels == other.channels && height == other.height &&
           width == other.width;
  }
};

/// [-1,1] generator range -> [0,1] unit range.
Image to_unit_range(const Image& img);

/// [0,1] unit range -> [-1,1] generator range.
Image to_generator_range(const Image& img);

/// Luminance Y = 0.299 R + 0.587 G + 0.114 B as a single-channel image.
/// Coefficients sum to exactly 1.0 so grayscale conversion is idempotent.
Image luminance(const Image& img);

bool all_finite(const Image& img);

/// Pixelwise a - b (shapes must match).
Image subtract(const Image& a, const Image& b);

double max_abs_value(const Image& img);
double mean_value(const Image& img);

/// Frobenius norm of the pixel data.
double frobenius_norm(const Image& img);

}  // namespace latentlab

#endif  // LATENTLAB_IMAGE_HPP_
