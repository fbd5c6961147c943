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

// Single-process training loop for the toy denoiser.
//
// Optimizers, both with decoupled weight decay on weight matrices only:
//   momentum  m <- mu m + g;                       p <- p - lr (m + wd p)
//   adamw     m <- b1 m + (1-b1) g; v <- b2 v + (1-b2) g^2
//             p <- p - lr (m_hat / (sqrt(v_hat) + eps) + wd p)
// with m_hat, v_hat the bias-corrected moments (mu doubles as b1).

#pragma once

#include <cstdint>
#include <string_view>

#include "hfrec/cpc_net.hpp"
#include "hfrec/hr_loss.hpp"
#include "hfrec/rng.hpp"

namespace hfrec::cpc {

enum class OptimizerKind : std::uint8_t { kMomentum, kAdamW };

OptimizerKind parse_optimizer(std::string_view s);  // momentum | adamw
const char* to_string(OptimizerKind k);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::kAdamW;
  double lr = 1e-3;
  double momentum = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 1e-4;
  double grad_clip = 0.0;  // global L2 norm clip; 0 disables

  void validate() const;
};

struct LossConfig {
  LossSelection selection = LossSelection::kHr;
  wavelet::SubbandWeights weights;
  hog::HogConfig hog;
};

class Trainer {
 public:
  Trainer(DenoiserConfig cfg, Shape latent, Params init, OptimizerConfig opt, LossConfig loss, std::uint64_t seed);

  // Draws t ~ U[0, 1] and eps ~ N(0, I) from the trainer's stream, then takes
  // one step. Throws NumericError (parameters untouched) on a non-finite loss.
  LossReport step(const TensorF& cond, const TensorF& x0);
  LossReport step_with(const TensorF& cond, const TensorF& x0, const TensorF& eps, double t);

  // Loss at the current parameters, no update.
  LossReport evaluate(const TensorF& cond, const TensorF& x0, const TensorF& eps, double t) const;

  const Params& params() const noexcept { return params_; }
  const DenoiserConfig& config() const noexcept { return cfg_; }
  const Shape& latent() const noexcept { return latent_; }
  std::int64_t steps_done() const noexcept { return step_; }

 private:
  ad::TensorMap<float> bind(const TensorF& cond, const TensorF& x0, const TensorF& eps, double t) const;
  LossReport report_of(const ad::Evaluation<float>& ev, double t) const;

  DenoiserConfig cfg_;
  Shape latent_;
  Params params_;
  Params velocity_;
  Params second_;  // adamw only
  OptimizerConfig opt_;
  LossConfig loss_;
  Rng rng_;
  ad::Graph graph_;
  HrLossNodes loss_nodes_{};
  std::int64_t step_ = 0;
};

}  // namespace hfrec::cpc
