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

#include <string>

#include "dp4/levels.hpp"
#include "dp4/mpoly.hpp"
#include "dp4/pencil.hpp"
#include "dp4/point_config.hpp"
#include "dp4/rational.hpp"
#include "dp4/sections.hpp"
#include "json.hpp"

namespace dp4::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Rat& r);
Json to_json(const MPoly& p);
Json to_json(const ProjPoint& p);
Json to_json(const ChartPoint& p);
Json to_json(const PDir& d);
Json to_json(const SymField& f);
Json to_json(const PointConfig& c);
Json to_json(const FiberReport& r);

/// Accumulates named pass/fail checks.
class CheckList {
 public:
  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool all_pass() const { return all_; }
  const Json& json() const { return checks_; }

 private:
  Json checks_ = Json::array();
  bool all_ = true;
};

}  // namespace dp4::cli
