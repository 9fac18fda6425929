// Copyright 2026 The prbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRBENCH_PGM_HPP
#define PRBENCH_PGM_HPP

#include <string>

#include "prbench/model.hpp"

namespace prbench {

/// Grayscale raster in intensity units, row-major.
struct GrayImage {
  Index height = 0;
  Index width = 0;
  int max_value = 255;
  Vector pixels;
};

/// Reads a portable graymap (P2 or P5). Throws IoError with the path on
/// failure.
GrayImage read_pgm(const std::string& path);

/// Writes a binary (P5) graymap. Pixel values are rounded and clamped to
/// [0, max_value].
void write_pgm(const std::string& path, const GrayImage& image);

/// Deterministic height x width test image with smooth and sharp structure,
/// values in [0, 255].
GrayImage synthetic_image(Index height = 64, Index width = 64);

}  // namespace prbench

#endif  // PRBENCH_PGM_HPP
