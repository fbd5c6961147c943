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

// Procedural clips with exactly known motion.
//
// Every kind is a continuous texture f(x, y), periodic with period (W, H),
// sampled at pixel centres of frame t shifted by t * velocity:
//
//   frame_t(x, y) = f(x - t vx, y - t vy)
//
// so frame_{t+1}(p) = frame_t(p - flow) with flow = (vx, vy) everywhere.
// `frequency` is an integer number of cycles (checker: square pairs, noise:
// highest harmonic) per image side, which keeps the textures periodic.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hfrec/video.hpp"

namespace hfrec::synth {

enum class SynthKind : std::uint8_t { kTranslatingSinusoid, kTranslatingChecker, kTranslatingNoiseTexture, kStatic };

SynthKind parse_kind(std::string_view s);  // translating_sinusoid | translating_checker | ...
const char* to_string(SynthKind k);

struct SynthParams {
  std::size_t height = 64;
  std::size_t width = 64;
  std::size_t length = 16;
  std::size_t channels = 3;
  int frequency = 2;
  double vx = 1.0;  // pixels / frame, +x is rightwards
  double vy = 0.0;  // +y is downwards

  // Rejects empty sizes, channels other than 1 or 3, frequency < 1 and
  // |vx| > W/4 or |vy| > H/4.
  void validate() const;
};

struct SynthClip {
  VideoClip clip;
  TensorF flows;  // (T-1, H, W, 2): (u, v) from frame t to t+1
};

// Static clips ignore the velocity and carry zero flow.
SynthClip generate_clip(SynthKind kind, const SynthParams& p, std::uint64_t seed);

std::string manifest_entry_json(SynthKind kind, const SynthParams& p, std::uint64_t seed);

}  // namespace hfrec::synth
