// Copyright 2026 The dp4 Authors
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

namespace dp4 {

/// Malformed or degenerate input: parse failures, repeated parameters,
/// coincident or collinear points, unknown variables.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical expectation did not hold on otherwise valid input.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The constraint kernel did not have the expected dimension.
class KernelDimensionError : public CheckFailure {
 public:
  KernelDimensionError(std::size_t expected, std::size_t actual)
      : CheckFailure("kernel dimension " + std::to_string(actual) + ", expected " +
                     std::to_string(expected)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

}  // namespace dp4
