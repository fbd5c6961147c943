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

// Seeded two-order degradation: (blur -> resize -> noise -> compression) x 2,
// then a final resize relative to the input size. Every stage clamps to
// [0, 1]. Blur, resize and quality are drawn once per clip and order; the
// noise field is drawn independently for every frame.
//
// Compression is a JPEG-like proxy: per channel, 8x8 orthonormal DCT-II blocks
// (edge blocks replicate-padded) with one uniform step
//   S    = q < 50 ? 5000 / q : 200 - 2 q
//   step = (S / 100) * 16 / 255
// so quality 100 is lossless and is skipped.

#pragma once

#include <cstdint>
#include <string>

#include "hfrec/video.hpp"

namespace hfrec::degrade {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct OrderConfig {
  Range blur_sigma{0.2, 3.0};  // pixels
  Range scale{0.25, 1.0};      // fraction of the order's input size
  Range noise_sigma{0.0, 0.1};
  Range quality{30.0, 95.0};   // 1..100
};

struct DegradationConfig {
  OrderConfig first;
  OrderConfig second;
  double final_scale = 0.25;  // relative to the original clip
  std::uint64_t seed = 0;

  void validate() const;
};

struct OrderParams {
  double blur_sigma = 0.0;
  double scale = 1.0;
  double noise_sigma = 0.0;
  double quality = 100.0;
  std::uint64_t noise_seed = 0;
};

struct DegradationParams {
  OrderParams first;
  OrderParams second;
  std::size_t out_height = 0;
  std::size_t out_width = 0;
};

// Individual stages, exposed for tests.
VideoClip gaussian_blur(const VideoClip& clip, double sigma);
VideoClip add_noise(const VideoClip& clip, double sigma, std::uint64_t seed);
VideoClip compress(const VideoClip& clip, double quality);
double quantization_step(double quality);

VideoClip degrade_order(const VideoClip& clip, const OrderParams& p);
std::pair<VideoClip, DegradationParams> degrade_two_order(const VideoClip& clip, const DegradationConfig& cfg);
// Re-applies a recorded parameter set.
VideoClip replay(const VideoClip& clip, const DegradationParams& p);

std::string params_to_json(const DegradationParams& p);
DegradationParams params_from_json(const std::string& text);
std::string config_to_json(const DegradationConfig& c);
// Missing keys keep their defaults.
DegradationConfig config_from_json(const std::string& text);

}  // namespace hfrec::degrade
