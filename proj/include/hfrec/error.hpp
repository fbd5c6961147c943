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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfrec {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments, inconsistent shapes or configs. The CLI maps these to exit
// code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Shape mismatch detected while building or running a graph. Carries the id
// of the node that rejected its operands.
class ShapeError : public ValidationError {
 public:
  ShapeError(std::size_t node, const std::string& what)
      : ValidationError("node " + std::to_string(node) + ": " + what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

// NaN/Inf showed up where finite values are required. The CLI maps these to
// exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfrec
