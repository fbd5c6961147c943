// Copyright (c) 2026, The hfrec Authors. All rights reserved.
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

#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace hfrec {

// One output sample of a 1-D linear resampler: (1 - w1) * v[i0] + w1 * v[i1].
struct LinearTap {
  std::size_t i0 = 0;
  std::size_t i1 = 0;
  double w1 = 0.0;
};

// Half-pixel-centre taps (align_corners = false) with edge clamping. When
// in_size == out_size every tap is the identity.
std::vector<LinearTap> linear_taps(std::size_t in_size, std::size_t out_size);

// Keys cubic (a = -0.5) taps with edge clamping, used for the bicubic upscale
// baseline.
struct CubicTap {
  std::array<std::size_t, 4> index{};
  std::array<double, 4> weight{};
};
std::vector<CubicTap> cubic_taps(std::size_t in_size, std::size_t out_size);

}  // namespace hfrec
