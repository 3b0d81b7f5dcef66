// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the ostrunc Project.

#pragma once

#include <cstdint>
#include <random>

namespace ostrunc {

// Seedable uniform source on [0,1) with full 53-bit mantissa resolution.
// Backed by mt19937_64, whose output sequence is fixed by the standard, so a
// seed pins the stream bit-for-bit across platforms.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0,1), one engine step per call.
  double next() {
    return static_cast<double>(engine_() >> 11) * 0x1p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ostrunc
