// Copyright 2026 The lindbrand Authors.
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

#include <stdexcept>
#include <string>

namespace lindbrand {

// Error taxonomy used across the library:
//   * std::invalid_argument  -- a caller violated a documented precondition
//                               (wrong shape, non-Hermitian input, bad range).
//   * std::domain_error      -- a mathematical function was evaluated outside
//                               its domain (e.g. a closed form below its
//                               minimum dimension).
//   * lindbrand::numerical_error -- an algorithm failed to converge or to
//                               meet its accuracy contract (stiff ODE step
//                               underflow, eigensolver failure, ...).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the experiment/config layer for malformed or inconsistent
// configuration input; the CLI maps it to its usage exit code.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lindbrand
