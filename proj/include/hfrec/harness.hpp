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

// Experiment orchestration behind the `hfrec` command line.
//
// Data flow:
//   synth    HR clips + ground-truth flow, manifest (train/eval split)
//   degrade  LR clips via the two-order pipeline, one seed per clip
//   train    denoiser on random (frames x size x size) windows of
//            (x0 = 2 HR - 1, cond = 2 bicubic(LR) - 1) pairs
//   eval     Euler sampling from seeded noise on every eval clip; PSNR, SSIM,
//            E_warp (ground-truth flow) and high-frequency residual energy
//   ablate   train + eval per variant, shared seed, data order and init
//   sweep    train + eval per high-frequency weight w in {w_ll=1, w_lh=w_hl=w_hh=w}
//
// Every command is a pure function of (config, input artifacts); all numbers
// are printed with format_number, so re-runs produce identical bytes.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hfrec/cpc_net.hpp"
#include "hfrec/degradation.hpp"
#include "hfrec/metrics.hpp"
#include "hfrec/synth.hpp"
#include "hfrec/trainer.hpp"

namespace hfrec::harness {

namespace fs = std::filesystem;

struct DataSpec {
  std::vector<std::pair<synth::SynthKind, std::size_t>> counts;  // in config order
  std::size_t height = 64, width = 64, length = 16, channels = 3;
  int min_frequency = 1, max_frequency = 4;
  double max_speed = 1.5;     // |vx|, |vy| drawn uniformly in [-max_speed, max_speed]
  std::size_t eval_every = 4;  // clip i is held out when i % eval_every == eval_every - 1
};

struct TrainingSpec {
  std::int64_t steps = 2000;
  std::size_t crop_frames = 4;
  std::size_t crop_size = 32;
  std::int64_t log_every = 100;
};

struct EvalSpec {
  int sampler_steps = 16;
  bool periodic_warp = false;
  std::size_t max_clips = 0;  // 0 = all eval clips
};

struct Variant {
  std::string name;
  cpc::ControlMode mode = cpc::ControlMode::kCpc;
  LossSelection loss = LossSelection::kHr;
};

// vanilla+rec, cpc+rec, cpc+rec+wlf, cpc+rec+hog, cpc+hr
std::vector<Variant> default_variants();
Variant parse_variant(const std::string& name);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  DataSpec data;
  degrade::DegradationConfig degradation;
  cpc::DenoiserConfig model;
  cpc::OptimizerConfig optimizer;
  cpc::LossConfig loss;
  TrainingSpec training;
  EvalSpec eval;
  std::vector<Variant> variants = default_variants();
  std::vector<double> sweep_weights{1.0, 1.5, 2.0, 3.0};
  std::vector<std::string> context;  // copied into report headers as "# " lines
  fs::path data_dir;                 // dataset produced by `synth`
  fs::path checkpoint;               // for `eval`

  void validate() const;
};

// Relative paths are resolved against base_dir. Missing sections keep their
// defaults; "seed" is required.
ExperimentConfig parse_config(const std::string& json_text, const fs::path& base_dir = {});
ExperimentConfig load_config(const fs::path& path);

struct ClipEntry {
  std::string id;
  synth::SynthKind kind = synth::SynthKind::kStatic;
  synth::SynthParams params;
  std::uint64_t seed = 0;
  bool eval = false;
};

struct Dataset {
  std::vector<ClipEntry> entries;
  std::vector<synth::SynthClip> clips;
};

std::vector<ClipEntry> plan_dataset(const DataSpec& spec, std::uint64_t seed);
Dataset generate_dataset(const DataSpec& spec, std::uint64_t seed);
void write_dataset(const Dataset& ds, const fs::path& dir);
Dataset load_dataset(const fs::path& dir);

// One LR/HR pair in model space.
struct Pair {
  std::string id;
  VideoClip hr;
  VideoClip lr;
  VideoClip upscaled;  // bicubic(lr) at HR size
  TensorF flows;
  TensorF x0;    // (1, C, T, H, W), 2 hr - 1
  TensorF cond;  // (1, C, T, H, W), 2 upscaled - 1
  degrade::DegradationParams degradation;
};

std::uint64_t degradation_seed(const ExperimentConfig& cfg, std::size_t clip_index);
std::vector<Pair> make_pairs(const ExperimentConfig& cfg, const Dataset& ds, bool eval_split);

struct TrainResult {
  cpc::Params params;
  std::vector<LossReport> log;
  bool aborted = false;
  std::string abort_message;
};

// Shared across variants: data order (seed), initial parameters (seed), t and
// eps draws (seed). Returns with aborted = true on a non-finite loss.
TrainResult train_model(const ExperimentConfig& cfg, const cpc::DenoiserConfig& model, const cpc::LossConfig& loss,
                        const std::vector<Pair>& train);

// Seeded Euler sampling; returns the restored clip in [0, 1].
VideoClip restore(const cpc::Denoiser& net, const cpc::Params& params, const Pair& pair, int steps,
                  std::uint64_t noise_seed);

struct EvalRow {
  metrics::MetricRecord record;
  double hf_residual = 0.0;
};

struct EvalResult {
  std::vector<EvalRow> rows;  // per clip
  EvalRow mean;
  std::vector<VideoClip> outputs;
};

EvalResult evaluate_model(const ExperimentConfig& cfg, const cpc::DenoiserConfig& model, const cpc::Params& params,
                          const std::vector<Pair>& eval, const std::string& method);
// The conditioning itself (bicubic upscale of the LR clip) as the output.
EvalResult evaluate_upscale(const ExperimentConfig& cfg, const std::vector<Pair>& eval);

// Loss terms of `params` on one fixed window of the first training pair at
// t = 0.5 with seeded noise.
LossReport snapshot_loss(const ExperimentConfig& cfg, const cpc::Params& params, const cpc::LossConfig& loss,
                         const std::vector<Pair>& train);

// Commands. Each writes into `out` (created if needed) and throws
// ValidationError / IoError / NumericError.
void cmd_synth(const ExperimentConfig& cfg, const fs::path& out);
void cmd_degrade(const ExperimentConfig& cfg, const fs::path& out);
void cmd_train(const ExperimentConfig& cfg, const fs::path& out);
void cmd_eval(const ExperimentConfig& cfg, const fs::path& out);
void cmd_ablate(const ExperimentConfig& cfg, const fs::path& out);
void cmd_sweep_weights(const ExperimentConfig& cfg, const fs::path& out);

}  // namespace hfrec::harness
