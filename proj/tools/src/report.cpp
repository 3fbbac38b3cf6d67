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

#include "dp4cli/report.hpp"

namespace dp4::cli {

using dp4::to_string;

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const MPoly& p) { return p.to_string(); }

Json to_json(const ProjPoint& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

Json to_json(const ChartPoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const PDir& d) { return Json::array({to_json(d.e1), to_json(d.e2)}); }

Json to_json(const SymField& f) {
  return {{"f", to_json(f.f())}, {"g", to_json(f.g())}, {"h", to_json(f.h())}};
}

Json to_json(const PointConfig& c) {
  Json pts = Json::array();
  for (const auto& p : c.normalized_points()) pts.push_back(to_json(p));
  Json transform = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(to_json(c.transform(i, j)));
    transform.push_back(row);
  }
  Json order = Json::array();
  for (auto k : c.order) order.push_back(k + 1);
  return {{"a", to_json(c.a)},
          {"b", to_json(c.b)},
          {"alpha_beta", Json::array({to_json(c.alpha_beta.alpha), to_json(c.alpha_beta.beta)})},
          {"normalized_points", pts},
          {"transform", transform},
          {"order", order}};
}

namespace {

Json surd_json(const QuadraticSurd& s) { return s.to_string(); }

}  // namespace

Json to_json(const FiberReport& r) {
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    Json j = {{"at_infinity", root.at_infinity},
              {"t", surd_json(root.t)},
              {"multiplicity", root.multiplicity},
              {"kappa", surd_json(root.kappa)}};
    if (root.s_squared) j["s_squared"] = surd_json(*root.s_squared);
    roots.push_back(j);
  }
  Json pairs = Json::array();
  for (const auto& [p, q] : r.involution_pairs) pairs.push_back(Json::array({p, q}));
  return {{"base", to_json(r.base)},
          {"direction", Json::array({to_json(r.e1), to_json(r.e2)})},
          {"status", to_string(r.status)},
          {"member", {{"uu", to_json(r.member.uu)}, {"vv", to_json(r.member.vv)}, {"uv", to_json(r.member.uv)}}},
          {"discriminant", to_json(r.discriminant)},
          {"roots", roots},
          {"involution_pairs", pairs},
          {"solution_count", r.solution_count}};
}

void CheckList::add(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  all_ = all_ && pass;
}

}  // namespace dp4::cli
