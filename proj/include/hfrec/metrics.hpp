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

// Full-reference and temporal metrics on VideoClips.
//
//   psnr        per frame 10 log10(1 / mse), mean over frames; a frame with
//               mse == 0 counts as kPsnrCap and the result is flagged infinite
//               only when every frame is
//   ssim        BT.601 luma, 11x11 Gaussian window (sigma 1.5), valid region,
//               C1 = 0.01^2, C2 = 0.03^2, mean over positions then frames
//   e_warp      frame t bilinearly resampled at p - flow_t(p), squared error
//               against frame t+1 over pixels whose source lies inside the
//               frame (or all pixels, wrapping, in periodic mode); mean over
//               pairs, times 1e3
//
// All accumulation is in double, in a fixed order.

#pragma once

#include <string>
#include <vector>

#include "hfrec/video.hpp"

namespace hfrec::metrics {

inline constexpr double kPsnrCap = 100.0;
inline constexpr double kWarpScale = 1e3;

struct Psnr {
  double db = 0.0;
  bool infinite = false;
  std::vector<double> per_frame;
};

Psnr psnr(const VideoClip& a, const VideoClip& b);
double ssim(const VideoClip& a, const VideoClip& b);

// (T, H, W) luma; single-channel clips pass through.
TensorD luma(const VideoClip& clip);

struct WarpOptions {
  bool periodic = false;
};

// flows: (T-1, H, W, 2) with (u, v) in pixels.
double warping_error(const VideoClip& clip, const TensorF& flows, const WarpOptions& opt = {});

// Frame t warped towards t+1 (bilinear, edge clamp or wrap); exposed for tests.
TensorF warp_frame(const VideoClip& clip, std::size_t t, const TensorF& flows, bool periodic);

// (T, W, C): row `row` of every frame stacked over time.
TensorF temporal_profile(const VideoClip& clip, std::size_t row);

// Approximate flow for clips without ground truth: for each block, the
// integer displacement within +-radius minimising the wrapped SSD between the
// block in frame t+1 and its source in frame t. Ties go to the smallest |d|.
TensorF block_matching_flow(const VideoClip& clip, std::size_t block = 8, int radius = 4);

// Wavelet LH + HL + HH energy of (a - b) per channel and frame, divided by the
// element count.
double high_frequency_residual(const VideoClip& a, const VideoClip& b);

struct MetricRecord {
  std::string clip_id;
  std::string method;
  Psnr psnr;
  double ssim = 0.0;
  double e_warp = 0.0;
};

std::string csv_header();  // clip_id,method,psnr,ssim,e_warp
std::string csv_row(const MetricRecord& r);
// Mean row over records (psnr "inf" only if every record is infinite).
MetricRecord aggregate(const std::vector<MetricRecord>& rows, const std::string& clip_id, const std::string& method);

}  // namespace hfrec::metrics
