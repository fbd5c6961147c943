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

// Reverse-mode automatic differentiation over a small, closed set of
// primitives. A Graph is a static, shape-checked DAG built once; forward()
// binds named inputs and materializes every node, backward() propagates a
// scalar seed back to every input.
//
// Primitive set:
//   add / sub / mul (numpy broadcasting), scalar scale,
//   matmul  (..., K) x (K, N) -> (..., N),
//   conv2d  fixed-kernel strided cross-correlation over the last two axes,
//   unary   pointwise nonlinearities (see UnaryFn), atan2 (binary pointwise),
//   sum / mean over all or selected axes,
//   slice / concat along one axis, reshape / permute (data movement only),
//   resize  bilinear, half-pixel centres, over the last two axes.
//
// Reductions always run serially in row-major order of the reduced operand so
// results are bit-reproducible.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hfrec/tensor.hpp"

namespace hfrec::ad {

using NodeId = std::size_t;

template <typename T>
using TensorMap = std::map<std::string, Tensor<T>, std::less<>>;

enum class OpKind : std::uint8_t {
  kInput,
  kConstant,
  kAdd,
  kSub,
  kMul,
  kScale,
  kMatMul,
  kConv2d,
  kUnary,
  kAtan2,
  kReduce,
  kSlice,
  kConcat,
  kReshape,
  kPermute,
  kResize,
};

const char* op_name(OpKind op);

enum class UnaryKind : std::uint8_t {
  kIdentity,
  kRelu,
  kTanh,
  kSilu,
  kSquare,
  kSoftSqrt,   // sqrt(x + a) - sqrt(a): zero at zero, smooth for a > 0
  kRsqrt,      // 1 / sqrt(x + a)
  kClampMax,   // min(x, a)
  kAngleHat,   // max(0, 1 - |wrap_c(x - a)| / b), wrap period c
};

struct UnaryFn {
  UnaryKind kind = UnaryKind::kIdentity;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static UnaryFn identity() { return {}; }
  static UnaryFn relu() { return {UnaryKind::kRelu}; }
  static UnaryFn tanh() { return {UnaryKind::kTanh}; }
  static UnaryFn silu() { return {UnaryKind::kSilu}; }
  static UnaryFn square() { return {UnaryKind::kSquare}; }
  static UnaryFn soft_sqrt(double delta) { return {UnaryKind::kSoftSqrt, delta}; }
  static UnaryFn rsqrt(double delta) { return {UnaryKind::kRsqrt, delta}; }
  static UnaryFn clamp_max(double hi) { return {UnaryKind::kClampMax, hi}; }
  // Triangular vote centred at `center` falling to zero at +-half_width, on a
  // circle of circumference `period`.
  static UnaryFn angle_hat(double center, double half_width, double period) {
    return {UnaryKind::kAngleHat, center, half_width, period};
  }
};

struct InputAttr {
  std::string name;
};
struct ConstantAttr {
  std::shared_ptr<const TensorD> value;
};
struct ScaleAttr {
  double factor = 1.0;
};
struct Conv2dAttr {
  std::vector<double> kernel;  // kh x kw, row-major
  std::size_t kh = 1, kw = 1;
  std::size_t sh = 1, sw = 1;
};
struct ReduceAttr {
  std::vector<std::size_t> axes;  // empty: all axes
  bool keepdims = false;
  bool mean = false;
};
struct SliceAttr {
  std::size_t axis = 0, begin = 0, end = 0;
};
struct ConcatAttr {
  std::size_t axis = 0;
};
struct PermuteAttr {
  std::vector<std::size_t> perm;
};
struct ResizeAttr {
  std::size_t height = 0, width = 0;
};

using NodeAttr = std::variant<std::monostate, InputAttr, ConstantAttr, ScaleAttr, Conv2dAttr, UnaryFn,
                              ReduceAttr, SliceAttr, ConcatAttr, PermuteAttr, ResizeAttr>;

struct Node {
  OpKind op = OpKind::kInput;
  std::vector<NodeId> inputs;
  Shape shape;
  NodeAttr attr;
};

// Node ids are assigned in construction order, which is a topological order.
class Graph {
 public:
  NodeId input(std::string name, Shape shape);
  NodeId constant(TensorD value);
  NodeId scalar(double value) { return constant(TensorD::scalar(value)); }

  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);
  NodeId scale(NodeId x, double factor);
  NodeId matmul(NodeId a, NodeId b);
  NodeId conv2d(NodeId x, std::vector<double> kernel, std::size_t kh, std::size_t kw, std::size_t sh,
                std::size_t sw);
  NodeId unary(NodeId x, UnaryFn fn);
  NodeId atan2(NodeId y, NodeId x);
  NodeId sum(NodeId x) { return reduce(x, {}, false, false); }
  NodeId mean(NodeId x) { return reduce(x, {}, false, true); }
  NodeId reduce(NodeId x, std::vector<std::size_t> axes, bool keepdims, bool mean);
  NodeId slice(NodeId x, std::size_t axis, std::size_t begin, std::size_t end);
  NodeId concat(const std::vector<NodeId>& xs, std::size_t axis);
  NodeId reshape(NodeId x, Shape shape);
  NodeId permute(NodeId x, std::vector<std::size_t> perm);
  NodeId resize(NodeId x, std::size_t height, std::size_t width);

  // Convenience compositions.
  NodeId square(NodeId x) { return unary(x, UnaryFn::square()); }
  NodeId mean_squared(NodeId x) { return mean(square(x)); }

  void mark_output(std::string name, NodeId id);

  const Node& node(NodeId id) const { return nodes_.at(id); }
  const Shape& shape(NodeId id) const { return nodes_.at(id).shape; }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::optional<NodeId> find_input(std::string_view name) const;
  std::optional<NodeId> find_output(std::string_view name) const;
  NodeId output(std::string_view name) const;
  const std::vector<NodeId>& inputs() const noexcept { return inputs_; }
  const std::map<std::string, NodeId, std::less<>>& outputs() const noexcept { return outputs_; }

 private:
  NodeId push(OpKind op, std::vector<NodeId> inputs, Shape shape, NodeAttr attr = {});
  void check_id(NodeId id) const;

  std::vector<Node> nodes_;
  std::vector<NodeId> inputs_;
  std::map<std::string, NodeId, std::less<>> input_names_;
  std::map<std::string, NodeId, std::less<>> outputs_;
};

// Materialized node values of one forward pass. Keeps a pointer to the graph,
// which must outlive it.
template <typename T>
class Evaluation {
 public:
  const Graph& graph() const noexcept { return *graph_; }
  const Tensor<T>& value(NodeId id) const { return values_.at(id); }
  const Tensor<T>& output(std::string_view name) const { return values_.at(graph_->output(name)); }
  const std::vector<Tensor<T>>& values() const noexcept { return values_; }

 private:
  template <typename U>
  friend Evaluation<U> forward(const Graph&, const TensorMap<U>&);

  const Graph* graph_ = nullptr;
  std::vector<Tensor<T>> values_;
};

// Every declared input must be bound with its declared shape and finite
// values; violations throw ShapeError / NumericError naming the input node.
template <typename T>
Evaluation<T> forward(const Graph& graph, const TensorMap<T>& inputs);

// Gradient of the scalar node `seed` with respect to every graph input, keyed
// by input name. Inputs the seed does not depend on get zero tensors.
template <typename T>
TensorMap<T> backward(const Evaluation<T>& eval, NodeId seed);
template <typename T>
TensorMap<T> backward(const Evaluation<T>& eval, std::string_view seed_output);

struct GradCheckEntry {
  std::string input;
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  bool pass = true;
};

struct GradCheckReport {
  std::vector<GradCheckEntry> entries;
  double tolerance = 0.0;

  bool pass() const;
  double worst() const;
  std::string summary() const;
};

struct GradCheckOptions {
  double tolerance = 1e-5;
  double step = 1e-3;
  std::vector<std::string> only;  // restrict to these inputs; empty = all
  // (4 D(h/2) - D(h)) / 3 instead of D(h): removes the h^2 truncation term,
  // which otherwise dominates the relative error of near-zero gradient
  // entries of curved losses.
  bool richardson = false;
};

// Central finite differences in 64-bit against backward(). Per element the
// error is |g_analytic - g_fd| / max(|g_fd|, 1e-8).
GradCheckReport grad_check(const Graph& graph, const TensorMap<double>& inputs, std::string_view seed_output,
                           const GradCheckOptions& options = {});

}  // namespace hfrec::ad
