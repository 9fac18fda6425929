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

#ifndef PRBENCH_RNG_HPP
#define PRBENCH_RNG_HPP

#include <array>
#include <cstdint>

namespace prbench {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A `CounterStream` is addressed by a (seed, stream) pair; the seed is the
/// 64-bit key and the stream id occupies the upper half of the 128-bit
/// counter. Draws inside a stream advance the lower half. Two streams with
/// different ids never overlap, so any row, mask or auxiliary draw can be
/// regenerated on its own without replaying the others.
///
/// Normal variates use the Box-Muller transform on pairs of 53-bit uniforms
/// and are bit-reproducible across platforms with IEEE-754 doubles and a
/// correctly rounded libm `log`, `cos`, `sin`.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open_low();
  double normal();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

/// One Philox4x32-10 block for the given key and counter words.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Reserved stream ids. Row i of a sensing ensemble uses stream i; tagged
// streams live in the top half of the id space.
namespace streams {
inline constexpr std::uint64_t kTagBit = 0x8000000000000000ULL;
inline constexpr std::uint64_t kPower = kTagBit | 0x01;
inline constexpr std::uint64_t kSphere = kTagBit | 0x02;
inline constexpr std::uint64_t kInit = kTagBit | 0x03;
inline constexpr std::uint64_t kProbe = kTagBit | 0x04;
inline constexpr std::uint64_t kRicPoints = kTagBit | 0x05;
// Mask l of a coded-diffraction ensemble uses kCdpMask + l.
inline constexpr std::uint64_t kCdpMask = kTagBit | 0x100000;
}  // namespace streams

}  // namespace prbench

#endif  // PRBENCH_RNG_HPP
