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

// High-frequency rectified loss: l_total = l_wlf + l_hog + l_rec, an
// unweighted sum. Terms switched off by the loss selection report 0.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hfrec/autodiff.hpp"
#include "hfrec/hog.hpp"
#include "hfrec/wavelet.hpp"

namespace hfrec {

enum class LossSelection : std::uint8_t { kRec, kRecWlf, kRecHog, kHr };

// "rec" | "rec+wlf" | "rec+hog" | "hr"
LossSelection parse_loss_selection(std::string_view s);
const char* to_string(LossSelection s);
inline bool uses_wlf(LossSelection s) { return s == LossSelection::kRecWlf || s == LossSelection::kHr; }
inline bool uses_hog(LossSelection s) { return s == LossSelection::kRecHog || s == LossSelection::kHr; }

struct LossReport {
  std::int64_t step = 0;
  double t = 0.0;
  double l_rec = 0.0;
  double l_wlf = 0.0;
  double l_hog = 0.0;
  double l_total = 0.0;
  wavelet::SubbandWeights weights;

  static std::string csv_header();  // step,t,l_rec,l_wlf,l_hog,l_total
  std::string csv_row() const;
};

struct HrLossNodes {
  ad::NodeId l_rec, l_wlf, l_hog, l_total;
};

// Builds the loss on (v_pred, target = eps - x0) and marks the outputs
// "l_rec", "l_wlf", "l_hog", "l_total".
HrLossNodes build_hr_loss(ad::Graph& g, ad::NodeId v_pred, ad::NodeId target, LossSelection sel,
                          const wavelet::SubbandWeights& w, const hog::HogConfig& cfg);

template <typename T>
LossReport hr_loss(const Tensor<T>& v_pred, const Tensor<T>& x0, const Tensor<T>& eps,
                   const wavelet::SubbandWeights& w = {}, const hog::HogConfig& cfg = {},
                   LossSelection sel = LossSelection::kHr);

// Shared numeric formatting for CSV reports (%.9g; "inf"/"nan" spelled out).
std::string format_number(double v);

}  // namespace hfrec
