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

// Toy conditional velocity predictor with a ControlNet-style branch.
//
// Latents are (B, C, T, H, W). Both streams work on tokens (B, L, D) obtained
// by a linear projection of non-overlapping (pt, ph, pw) patches.
//
//   main:    X_0 = patch(z_t) Wp + bp
//            X_i = block_i(X_{i-1}) [+ gamma_i * F_{floor(i / r)}],  r = ceil(l_main / l_cpc)
//            v   = unpatch(X_{l_main} Wo + bo)
//   branch:  cpc      B_0 = patch(cond) Wc + bc
//            vanilla  B_0 = patch(z_t) Wz + bz + patch(cond) Wc + bc
//            F_j = cblock_j(F_{j-1}),  F_{-1} = B_0
//   block:   h = x + W2 act(W1 (x + e) + b1) + b2,  e = act(temb We + be)
//
// Parameters are named tensors; each is initialised from its own seed stream
// derived from its name, so modes and loss variants that share a parameter
// also share its initial value.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfrec/autodiff.hpp"
#include "hfrec/tensor.hpp"

namespace hfrec::cpc {

enum class ControlMode : std::uint8_t { kCpc, kVanillaControlNet, kNoControl };
enum class Activation : std::uint8_t { kSilu, kIdentity };

ControlMode parse_control_mode(std::string_view s);  // cpc | vanilla_controlnet | no_control
const char* to_string(ControlMode m);
Activation parse_activation(std::string_view s);     // silu | identity
const char* to_string(Activation a);

struct FusionSchedule {
  std::size_t l_main = 8;
  std::size_t l_cpc = 4;

  // Throws ValidationError unless 1 <= l_cpc <= l_main.
  void validate() const;
  std::size_t ratio() const { return (l_main + l_cpc - 1) / l_cpc; }
  std::size_t feature_for(std::size_t main_block) const { return main_block / ratio(); }
};

// (main block i, branch feature floor(i / r)) for every main block, in order.
std::vector<std::pair<std::size_t, std::size_t>> fusion_indices(const FusionSchedule& s);

struct DenoiserConfig {
  std::size_t channels = 3;
  std::size_t patch_t = 2, patch_h = 4, patch_w = 4;
  std::size_t hidden = 32;
  std::size_t time_embed = 16;
  std::size_t l_main = 8;
  std::size_t l_cpc = 4;
  ControlMode mode = ControlMode::kCpc;
  Activation activation = Activation::kSilu;
  bool per_block_gamma = false;
  double gamma_init = 1.0;
  double init_scale = 1.0;  // multiplies the 1/sqrt(fan_in) weight std

  void validate() const;
  // Also checks that the patch sizes divide the latent.
  void validate_latent(const Shape& latent) const;
  std::size_t patch_dim() const { return channels * patch_t * patch_h * patch_w; }
  FusionSchedule schedule() const { return {l_main, l_cpc}; }
  bool has_branch() const { return mode != ControlMode::kNoControl; }
};

using Params = ad::TensorMap<float>;

// Deterministic initialisation; weights ~ N(0, init_scale^2 / fan_in), the
// second layer of every block and the output head at 1/10 of that, biases 0,
// gamma = gamma_init.
Params init_params(const DenoiserConfig& cfg, std::uint64_t seed);

// Names of the parameters the config uses, sorted.
std::vector<std::string> parameter_names(const DenoiserConfig& cfg);
bool is_decayed(std::string_view param_name);  // weights yes; biases, gamma no

std::size_t parameter_count(const Params& p);
// Parameters feeding the branch input (cond projection, plus the z_t patch
// projection in vanilla mode).
std::size_t branch_input_parameter_count(const DenoiserConfig& cfg);

// Sinusoidal embedding of t (scaled by 1000), shape (batch, 1, dim).
TensorF time_embedding(double t, std::size_t batch, std::size_t dim);

struct DenoiserNodes {
  ad::NodeId z_t, cond, temb;
  ad::NodeId v_pred;
  std::optional<ad::NodeId> branch_input;
};

// Declares inputs "z_t", "cond", "temb" and one input per parameter, and marks
// outputs "v_pred" and (with a branch) "branch_input".
DenoiserNodes build_denoiser(ad::Graph& g, const DenoiserConfig& cfg, const Shape& latent);

// Graph built once for a latent shape, reusable across parameter snapshots.
class Denoiser {
 public:
  Denoiser(DenoiserConfig cfg, Shape latent);

  const DenoiserConfig& config() const noexcept { return cfg_; }
  const Shape& latent() const noexcept { return latent_; }
  const ad::Graph& graph() const noexcept { return graph_; }
  const DenoiserNodes& nodes() const noexcept { return nodes_; }

  template <typename T>
  Tensor<T> predict(const ad::TensorMap<T>& params, const Tensor<T>& z_t, const Tensor<T>& cond, double t) const;

 private:
  DenoiserConfig cfg_;
  Shape latent_;
  ad::Graph graph_;
  DenoiserNodes nodes_{};
};

// One-shot forward; params may be float or double.
template <typename T>
Tensor<T> cpc_forward(const DenoiserConfig& cfg, const ad::TensorMap<T>& params, const Tensor<T>& z_t,
                      const Tensor<T>& cond, double t);

template <typename T>
ad::TensorMap<T> cast_params(const Params& p) {
  ad::TensorMap<T> out;
  for (const auto& [k, v] : p) out.emplace(k, v.template cast<T>());
  return out;
}

// Checkpoint: "HFCK", version u8, count u32 LE, then per tensor a u32 name
// length, the name bytes and an HFRT record. save_checkpoint also writes a
// JSON sidecar (<path>.json) holding the config.
void save_checkpoint(const std::string& path, const DenoiserConfig& cfg, const Params& params);
std::pair<DenoiserConfig, Params> load_checkpoint(const std::string& path);

std::string config_to_json(const DenoiserConfig& cfg);
DenoiserConfig config_from_json(const std::string& text);

}  // namespace hfrec::cpc
