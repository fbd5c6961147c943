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

// Pixel-space video clips: frames (T, H, W, C) with values in [0, 1].

#pragma once

#include <filesystem>

#include "hfrec/tensor.hpp"

namespace hfrec {

struct VideoClip {
  TensorF frames;  // (T, H, W, C)
  double fps = 24.0;

  VideoClip() = default;
  VideoClip(TensorF f, double rate = 24.0);

  std::size_t length() const { return frames.dim(0); }
  std::size_t height() const { return frames.dim(1); }
  std::size_t width() const { return frames.dim(2); }
  std::size_t channels() const { return frames.dim(3); }
  std::size_t frame_size() const { return height() * width() * channels(); }

  float* frame(std::size_t t) { return frames.data().data() + t * frame_size(); }
  const float* frame(std::size_t t) const { return frames.data().data() + t * frame_size(); }

  // Throws ValidationError unless rank 4, non-empty, finite, and in [0, 1].
  void validate() const;
  void clip_unit();  // clamps every value to [0, 1]
};

enum class ResizeFilter { kBilinear, kBicubic };

// Spatial resize of every frame (half-pixel centres, edge clamp); bicubic
// output is clamped back to [0, 1].
VideoClip resize_clip(const VideoClip& clip, std::size_t height, std::size_t width,
                      ResizeFilter filter = ResizeFilter::kBilinear);

// (T, H, W, C) <-> (1, C, T, H, W)
TensorF clip_to_latent(const VideoClip& clip);
VideoClip latent_to_clip(const TensorF& latent, double fps = 24.0);

// Binary PPM (P6, 8-bit). Single-channel frames are written as grey RGB.
// Values are rounded to the nearest of 256 levels.
void write_ppm(const std::filesystem::path& path, const float* hwc, std::size_t h, std::size_t w, std::size_t c);
void write_frame_ppm(const std::filesystem::path& path, const VideoClip& clip, std::size_t t);
// Returns (H, W, 3) in [0, 1].
TensorF read_ppm(const std::filesystem::path& path);

}  // namespace hfrec
