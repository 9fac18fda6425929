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

#include "prbench/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "prbench/errors.hpp"

namespace prbench {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  return token;
}

long parse_positive(const std::string& token, const std::string& path,
                    const char* field) {
  try {
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used == token.size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw IoError(path + ": invalid " + field + " '" + token + "'");
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  const std::string magic = next_token(in);
  if (magic != "P2" && magic != "P5") {
    throw IoError(path + ": not a portable graymap (magic '" + magic + "')");
  }
  GrayImage img;
  img.width = parse_positive(next_token(in), path, "width");
  img.height = parse_positive(next_token(in), path, "height");
  const long maxval = parse_positive(next_token(in), path, "maxval");
  if (maxval > 65535) throw IoError(path + ": maxval above 65535");
  img.max_value = static_cast<int>(maxval);
  const Index count = img.width * img.height;
  img.pixels.resize(count);
  if (magic == "P2") {
    for (Index i = 0; i < count; ++i) {
      long v;
      if (!(in >> v) || v < 0 || v > maxval) {
        throw IoError(path + ": bad or missing pixel " + std::to_string(i));
      }
      img.pixels(i) = static_cast<double>(v);
    }
  } else {
    const int bytes = maxval < 256 ? 1 : 2;
    std::vector<unsigned char> raw(static_cast<std::size_t>(count * bytes));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
      throw IoError(path + ": truncated pixel data");
    }
    for (Index i = 0; i < count; ++i) {
      const long v = bytes == 1 ? raw[i] : (raw[2 * i] << 8) | raw[2 * i + 1];
      if (v > maxval) throw IoError(path + ": pixel above maxval");
      img.pixels(i) = static_cast<double>(v);
    }
  }
  return img;
}

void write_pgm(const std::string& path, const GrayImage& image) {
  if (image.pixels.size() != image.height * image.width || image.max_value < 1 ||
      image.max_value > 65535) {
    throw DomainError("write_pgm: inconsistent image");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << "P5\n" << image.width << ' ' << image.height << '\n' << image.max_value << '\n';
  const bool wide = image.max_value > 255;
  for (Index i = 0; i < image.pixels.size(); ++i) {
    const double v = image.pixels(i);
    const long q = std::isfinite(v)
                       ? std::clamp(std::lround(v), 0L, static_cast<long>(image.max_value))
                       : 0L;
    if (wide) out.put(static_cast<char>(q >> 8));
    out.put(static_cast<char>(q & 0xff));
  }
  if (!out) throw IoError(path + ": write failed");
}

GrayImage synthetic_image(Index height, Index width) {
  if (height < 1 || width < 1) throw DomainError("synthetic_image: empty size");
  GrayImage img;
  img.height = height;
  img.width = width;
  img.pixels.resize(height * width);
  for (Index r = 0; r < height; ++r) {
    for (Index c = 0; c < width; ++c) {
      const double u = (static_cast<double>(c) + 0.5) / static_cast<double>(width);
      const double v = (static_cast<double>(r) + 0.5) / static_cast<double>(height);
      double value = 40.0 + 60.0 * v;  // vertical gradient
      const double du = u - 0.35, dv = v - 0.4;
      value += 120.0 * std::exp(-(du * du + dv * dv) / 0.02);  // soft disc
      if (u > 0.6 && u < 0.85 && v > 0.55 && v < 0.8) value += 90.0;  // block
      value += 20.0 * std::sin(12.0 * u) * std::cos(9.0 * v);  // texture
      img.pixels(r * width + c) = std::clamp(value, 0.0, 255.0);
    }
  }
  return img;
}

}  // namespace prbench
