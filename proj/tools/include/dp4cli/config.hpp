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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dp4/point_config.hpp"
#include "dp4/projective.hpp"
#include "dp4/rational.hpp"

namespace dp4::cli {

enum class InputKind { theta, points, ab };

struct RunConfig {
  InputKind kind = InputKind::theta;
  std::vector<Rat> theta;
  std::array<ProjPoint, 5> points;
  Rat a;
  Rat b;

  std::uint64_t seed = 0;
  bool symbolic = false;
  bool tangency = false;
  bool plane_only = false;
  bool corrupt_basis = false;
  bool timing = false;
  std::string out_path;
};

/// The worked example used when no config file is given.
RunConfig default_config();

/// Parses {"theta": [...]}, {"points": [[..], ...]} or {"ab": [..]}.
/// Rationals may be "p/q" strings or JSON integers. Throws InputError.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Theta goes through the Veronese points; points are normalized; an ab
/// pair is taken as already normal.
PointConfig to_point_config(const RunConfig& config);

std::string to_string(InputKind kind);

}  // namespace dp4::cli
