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

#include "dp4cli/config.hpp"

#include <fstream>
#include <sstream>

#include "dp4/errors.hpp"
#include "dp4/pencil.hpp"
#include "json.hpp"

namespace dp4::cli {

namespace {

using Json = nlohmann::json;

Rat rat_from_json(const Json& v, const std::string& where) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(Int(v.dump()));
  throw InputError(where + ": expected a \"p/q\" string or an integer");
}

std::vector<Rat> rat_list(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) {
    throw InputError(where + ": expected an array of " + std::to_string(n) + " rationals");
  }
  std::vector<Rat> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rat_from_json(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::theta: return "theta";
    case InputKind::points: return "points";
    case InputKind::ab: return "ab";
  }
  return "theta";
}

RunConfig default_config() {
  RunConfig c;
  c.kind = InputKind::theta;
  c.theta = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)};
  return c;
}

RunConfig parse_config_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "theta" && key != "points" && key != "ab") throw InputError("unknown config key '" + key + "'");
  }
  if (doc.size() != 1) throw InputError("config needs exactly one of theta, points, ab");

  RunConfig c;
  if (doc.contains("theta")) {
    c.kind = InputKind::theta;
    c.theta = rat_list(doc["theta"], 5, "theta");
  } else if (doc.contains("points")) {
    c.kind = InputKind::points;
    const Json& pts = doc["points"];
    if (!pts.is_array() || pts.size() != 5) throw InputError("points: expected five homogeneous triples");
    for (std::size_t i = 0; i < 5; ++i) {
      const auto r = rat_list(pts[i], 3, "points[" + std::to_string(i) + "]");
      c.points[i] = ProjPoint{r[0], r[1], r[2]};
      if (is_zero(c.points[i])) throw InputError("points[" + std::to_string(i) + "] is the zero vector");
    }
  } else {
    c.kind = InputKind::ab;
    const auto r = rat_list(doc["ab"], 2, "ab");
    c.a = r[0];
    c.b = r[1];
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

PointConfig to_point_config(const RunConfig& config) {
  switch (config.kind) {
    case InputKind::theta:
      require_distinct(config.theta);
      return normalize_config(veronese_points(config.theta));
    case InputKind::points:
      return normalize_config(config.points);
    case InputKind::ab:
      return PointConfig::from_ab(config.a, config.b);
  }
  throw InputError("no input");
}

}  // namespace dp4::cli
