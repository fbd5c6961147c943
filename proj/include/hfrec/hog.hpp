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

// Differentiable histogram of oriented gradients over the last two axes.
//
// Per (leading-index) slice:
//   gx, gy   central differences, one-sided at the borders (gx along width)
//   m        sqrt(gx^2 + gy^2 + d) - sqrt(d), d = 1e-12 (exactly 0 on flat input)
//   theta    atan2(gy, gx), unsigned: votes use a period of 180 degrees
//   votes    m split linearly between the two nearest bin centres
//            (k + 0.5) * 180/bins, wrapping between the last and first bin
//   cells    sum of votes over cell_size x cell_size tiles (remainder dropped)
//   blocks   block_size x block_size cells, stride one cell, L2-Hys:
//            v / |v|, clip at hys_clip, v / |v| again (zero stays zero)
//
// The descriptor has shape (leading..., block_size^2 * bins, Hb, Wb); entry
// (o * bins + k) is bin k of the o-th cell of the block, cells row-major.

#pragma once

#include <algorithm>
#include <utility>

#include "hfrec/autodiff.hpp"
#include "hfrec/tensor.hpp"

namespace hfrec::hog {

struct HogConfig {
  std::size_t bins = 9;
  std::size_t cell_size = 4;
  std::size_t block_size = 2;
  double hys_clip = 0.2;

  double bin_width_degrees() const { return 180.0 / static_cast<double>(bins); }
  void validate() const;
  // Smallest admissible spatial extent.
  std::size_t min_extent() const { return std::max<std::size_t>(3, cell_size * block_size); }
};

inline constexpr double kMagnitudeDelta = 1e-12;
inline constexpr double kNormEpsilon = 1e-12;

template <typename T>
std::pair<Tensor<T>, Tensor<T>> spatial_gradients(const Tensor<T>& x);

// Evaluated through the graph builder below.
template <typename T>
Tensor<T> hog_descriptor(const Tensor<T>& x, const HogConfig& cfg = {});

// mean((D(v_pred) - D(eps - x0))^2)
template <typename T>
double hog_loss(const Tensor<T>& v_pred, const Tensor<T>& x0, const Tensor<T>& eps, const HogConfig& cfg = {});

Shape descriptor_shape(const Shape& x, const HogConfig& cfg);

std::pair<ad::NodeId, ad::NodeId> build_spatial_gradients(ad::Graph& g, ad::NodeId x);
ad::NodeId build_descriptor(ad::Graph& g, ad::NodeId x, const HogConfig& cfg);
ad::NodeId build_hog_loss(ad::Graph& g, ad::NodeId v_pred, ad::NodeId target, const HogConfig& cfg);

}  // namespace hfrec::hog
