// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_PNG_IO_HPP_
#define LATENTLAB_PNG_IO_HPP_

#include <filesystem>

#include "latentlab/image.hpp"

namespace latentlab {

/// Reads an 8-bit PNG as a 3-channel image in [0, 1]. Grayscale and
/// palette/alpha variants are expanded to RGB.
Image read_png(const std::filesystem::path& path);

/// Writes a [0, 1] image as 8-bit RGB (or grayscale for 1 channel).
/// Values are clamped; no ancillary chunks are emitted, so output bytes are
/// a pure function of the pixels.
void write_png(const std::filesystem::path& path, const Image& img);

}  // namespace latentlab

#endif  // LATENTLAB_PNG_IO_HPP_
