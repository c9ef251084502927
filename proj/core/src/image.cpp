// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "latentlab/image.hpp"

#include <cmath>

#include "latentlab/errors.hpp"

namespace latentlab {

Image to_unit_range(const Image& img) {
  Image out = img;
  for (double& v : out.data) v = 0.5 * (v + 1.0);
  return out;
}

Image to_generator_range(const Image& img) {
  Image out = img;
  for (double& v : out.data) v = 2.0 * v - 1.0;
  return out;
}

Image luminance(const Image& img) {
  if (img.channels == 1) return img;
  if (img.channels != 3) {
    throw DimensionMismatchError("luminance: expected 1 or 3 channels, got " +
                                 std::to_string(img.channels));
  }
  constexpr double kR = 0.299;
  constexpr double kG = 0.587;
  constexpr double kB = 1.0 - kR - kG;  // sums to exactly 1.0 in double
  Image out(1, img.height, img.width);
  const double* r = img.plane(0);
  const double* g = img.plane(1);
  const double* b = img.plane(2);
  double* y = out.plane(0);
  const std::size_t n = static_cast<std::size_t>(img.height) * img.width;
  for (std::size_t i = 0; i < n; ++i) y[i] = kR * r[i] + kG * g[i] + kB * b[i];
  return out;
}

bool all_finite(const Image& img) {
  for (double v : img.data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Image subtract(const Image& a, const Image& b) {
  if (!a.same_shape(b)) {
    throw DimensionMismatchError("subtract: image shapes differ");
  }
  Image out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

double max_abs_value(const Image& img) {
  double m = 0.0;
  for (double v : img.data) m = std::max(m, std::abs(v));
  return m;
}

double mean_value(const Image& img) {
  if (img.data.empty()) return 0.0;
  double s = 0.0;
  for (double v : img.data) s += v;
  return s / static_cast<double>(img.data.size());
}

double frobenius_norm(const Image& img) {
  double s = 0.0;
  for (double v : img.data) s += v * v;
  return std::sqrt(s);
}

}  // namespace latentlab
