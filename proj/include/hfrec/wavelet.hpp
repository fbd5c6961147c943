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

// Single-level orthonormal 2D Haar transform over the last two axes.
//
// Filters L = [1, 1]/sqrt2, H = [-1, 1]/sqrt2 applied along height then width
// with stride 2. Band naming is (height filter)(width filter):
//
//   LL = L.L    LH = L(height) H(width)    HL = H(height) L(width)    HH = H.H
//
// Odd height/width is reflect-padded by one sample on the trailing edge
// (x[n] = x[n-2]) before the transform; reconstruction yields the padded size.

#pragma once

#include "hfrec/autodiff.hpp"
#include "hfrec/tensor.hpp"

namespace hfrec::wavelet {

struct SubbandWeights {
  double ll = 1.0;
  double lh = 2.0;
  double hl = 2.0;
  double hh = 2.0;

  static SubbandWeights unit() { return {1.0, 1.0, 1.0, 1.0}; }
  // Throws ValidationError on negative or non-finite weights.
  void validate() const;
};

template <typename T>
struct SubbandSet {
  Tensor<T> ll, lh, hl, hh;
};

template <typename T>
SubbandSet<T> haar_decompose(const Tensor<T>& x);

template <typename T>
Tensor<T> haar_reconstruct(const SubbandSet<T>& s);

// Sum of squared LH + HL + HH coefficients.
template <typename T>
double high_frequency_energy(const Tensor<T>& x);

// Weighted sub-band loss on r = v_pred - (eps - x0):
//
//   wlf = sum_b  w_b * sum(f_b(r)^2) / N
//
// with N the (padded) element count of r, i.e. each band's mean square is
// scaled by |band| / N = 1/4. With unit weights this is exactly mean(r^2),
// the rec loss, because the transform is orthonormal.
template <typename T>
double wlf_loss(const Tensor<T>& v_pred, const Tensor<T>& x0, const Tensor<T>& eps,
                const SubbandWeights& w = {});

struct BandNodes {
  ad::NodeId ll, lh, hl, hh;
};

ad::NodeId build_reflect_pad(ad::Graph& g, ad::NodeId x);
BandNodes build_decompose(ad::Graph& g, ad::NodeId x);
// Loss on an already-formed residual node.
ad::NodeId build_wlf_loss(ad::Graph& g, ad::NodeId residual, const SubbandWeights& w);

}  // namespace hfrec::wavelet
