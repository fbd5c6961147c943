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

// Rectified-flow forward process and velocity objective.
//
//   z_t = alpha(t) x0 + sigma(t) eps,   alpha = 1 - t, sigma = t
//   v*  = d z_t / d t = eps - x0
//
// The schedule is fixed to the straight path: eps - x0 is only the exact path
// derivative for this choice.

#pragma once

#include <functional>

#include "hfrec/autodiff.hpp"
#include "hfrec/rng.hpp"
#include "hfrec/tensor.hpp"

namespace hfrec::diffusion {

struct LinearSchedule {
  static constexpr double alpha(double t) noexcept { return 1.0 - t; }
  static constexpr double sigma(double t) noexcept { return t; }
};

template <typename T>
struct DiffusionSample {
  Tensor<T> x0;
  Tensor<T> eps;
  double t = 0.0;
  Tensor<T> zt;
};

template <typename T>
DiffusionSample<T> forward_diffuse(const Tensor<T>& x0, const Tensor<T>& eps, double t);

template <typename T>
Tensor<T> velocity_target(const Tensor<T>& x0, const Tensor<T>& eps);

// mean((v_pred - (eps - x0))^2)
template <typename T>
double rec_loss(const Tensor<T>& v_pred, const Tensor<T>& x0, const Tensor<T>& eps);

// Graph pieces shared with the training graph.
ad::NodeId build_velocity_target(ad::Graph& g, ad::NodeId x0, ad::NodeId eps);
ad::NodeId build_rec_loss(ad::Graph& g, ad::NodeId v_pred, ad::NodeId target);

// Training-time t ~ U[0, 1].
inline double sample_time(Rng& rng) { return rng.uniform(); }

// v = model(z_t, cond, t)
using VelocityModel = std::function<TensorF(const TensorF& z, const TensorF& cond, double t)>;

// Uniform-step Euler integration of dz/dt = v from t = 1 down to t = 0.
// Throws NumericError naming the step if the model emits non-finite values.
TensorF euler_sample(const VelocityModel& model, TensorF z1, const TensorF& cond, int steps);

}  // namespace hfrec::diffusion
