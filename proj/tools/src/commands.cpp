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

#include "dp4cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "dp4/errors.hpp"
#include "dp4/levels.hpp"
#include "dp4/pencil.hpp"
#include "dp4/random.hpp"
#include "dp4/sections.hpp"
#include "dp4/symbolic.hpp"
#include "dp4/symplectic.hpp"

namespace dp4::cli {

using dp4::to_string;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join_rats(std::span<const Rat> values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + to_string(v);
  return "[" + s + "]";
}

void require_theta(const RunConfig& config, const std::string& verb) {
  if (config.kind != InputKind::theta) throw InputError(verb + " needs a theta config");
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json rat_array(std::span<const Rat> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json input_json(const RunConfig& c) {
  Json j = {{"kind", to_string(c.kind)}};
  switch (c.kind) {
    case InputKind::theta: j["theta"] = rat_array(c.theta); break;
    case InputKind::points: {
      Json pts = Json::array();
      for (const auto& p : c.points) pts.push_back(to_json(p));
      j["points"] = pts;
      break;
    }
    case InputKind::ab: j["ab"] = Json::array({to_json(c.a), to_json(c.b)}); break;
  }
  return j;
}

// Slot vectors of both fields stacked; rank 2 means they span the same plane
// as any other basis of rank 2 when the stacked rank of all four is still 2.
std::size_t joint_rank(const std::vector<SymField>& fields) {
  RatMatrix m(0, kSlotCount);
  for (const auto& f : fields) m.append_row(to_slots(f));
  return rank(m);
}

// ------------------------------------------------------------------ pieces

struct SectionsPart {
  PointConfig config;
  SectionBasis basis;
  Json json;
};

SectionsPart sections_part(const PointConfig& config, CheckList& checks) {
  const ConstraintSystem sys = assemble_system(config);
  const SectionBasis basis = kernel_basis(sys, config);
  Json prefix = Json::array();
  for (std::size_t k = 0; k <= 5; ++k) prefix.push_back(section_space_dimension(config, k));
  const bool rows_ok = annihilated(sys, basis.H) && annihilated(sys, basis.G);
  const bool transport_ok = chart_transport_check(basis.H) && chart_transport_check(basis.G);
  checks.add("sections.kernel_dimension", true, "2");
  checks.add("sections.rows_annihilate_basis", rows_ok, std::to_string(sys.size()) + " rows");
  checks.add("sections.chart_transport", transport_ok, "both fields extend across the second chart");
  Json j = {{"config", to_json(config)},
            {"row_count", sys.size()},
            {"kernel_dimension", 2},
            {"prefix_dimensions", prefix},
            {"basis", {{"H", to_json(basis.H)}, {"G", to_json(basis.G)}}}};
  return {config, basis, j};
}

Json certificate_json(const InvolutivityCertificate& cert) {
  Json samples = Json::array();
  for (const auto& s : cert.samples) samples.push_back({{"point", rat_array(s.point)}, {"value", to_json(s.value)}});
  return {{"R", to_json(cert.R)}, {"is_zero", cert.is_zero}, {"samples", samples},
          {"samples_consistent", cert.samples_consistent}};
}

void add_certificate_checks(const InvolutivityCertificate& cert, CheckList& checks, const std::string& prefix) {
  const bool samples_vanish =
      std::all_of(cert.samples.begin(), cert.samples.end(), [](const SampleCheck& s) { return sgn(s.value) == 0; });
  checks.add(prefix + "R_is_zero", cert.is_zero, cert.is_zero ? "R = 0" : "R has " + std::to_string(cert.R.size()) + " terms");
  checks.add(prefix + "samples_vanish", samples_vanish, std::to_string(cert.samples.size()) + " sample points");
  checks.add(prefix + "samples_match_R", cert.samples_consistent, "omega(A,B) equals R at every sample");
}

Json symbolic_part(const PointConfig& config, CheckList& checks) {
  Json out = Json::array();
  for (const AlphaBeta& branch : {branch_minus_one(), branch_minus_one_half()}) {
    const SymbolicCertificate cert = symbolic_involutivity(branch);
    const std::string tag = "symbolic[" + to_string(branch.alpha) + "," + to_string(branch.beta) + "].";
    checks.add(tag + "rows_vanish", cert.rows_vanish, "kernel annihilates all 7 rows of the fifth point");
    checks.add(tag + "R_is_zero", cert.is_zero, "");
    checks.add(tag + "degeneracy_locus_nonzero", !cert.degeneracy_locus.is_zero(), "");
    out.push_back({{"branch", Json::array({to_json(branch.alpha), to_json(branch.beta)})},
                   {"fixed_kernel_dimension", cert.fixed_kernel_dim},
                   {"symbolic_rank", cert.symbolic_rank},
                   {"R", to_json(cert.R)},
                   {"is_zero", cert.is_zero},
                   {"degeneracy_locus", to_json(cert.degeneracy_locus)}});
    if (branch == config.alpha_beta) {
      // The symbolic kernel specialized at this config must span the numeric one.
      const auto [h, g] = specialize_symbolic(cert, config.a, config.b);
      const SectionBasis numeric = compute_sections(config);
      const bool same = joint_rank({h, g}) == 2 && joint_rank({h, g, numeric.H, numeric.G}) == 2;
      checks.add(tag + "specializes_to_numeric_kernel", same,
                 "(a,b) = (" + to_string(config.a) + ", " + to_string(config.b) + ")");
    }
  }
  return out;
}

Json node_json(const Node& n) {
  return {{"i", n.i},
          {"lines", Json::array({line_name(n.lines[0][0], n.lines[0][1]), line_name(n.lines[1][0], n.lines[1][1])})},
          {"point", to_json(n.point)}};
}

struct SpecialPart {
  std::vector<SpecialDirection> dirs;
  Json json;
};

SpecialPart special_part(const SectionBasis& basis, CheckList& checks) {
  const auto dirs = special_directions(basis);
  std::vector<PDir> seen;
  Json list = Json::array();
  bool cubic_ok = true;
  for (const auto& d : dirs) {
    seen.push_back(d.direction);
    const ReducibilityResult red = reducibility_test(basis, d.direction.e1, d.direction.e2);
    const EbiCubic cubic = ebi_cubic(basis.config, d.i);
    Json witnesses = Json::array();
    for (const auto& w : d.witnesses) witnesses.push_back(node_json(w));
    Json entry = {{"i", d.i},
                  {"direction", to_json(d.direction)},
                  {"witnesses", witnesses},
                  {"reducible", red.reducible},
                  {"cubic", {{"dim_tangency", cubic.dim_tangency}, {"dim_through", cubic.dim_through}}}};
    if (red.sqrt) {
      entry["sqrt_discriminant"] = to_json(*red.sqrt);
      entry["sqrt_degree"] = red.sqrt->total_degree();
    }
    if (cubic.cubic) {
      entry["cubic"]["chart_equation"] = to_json(*cubic.cubic);
      if (red.sqrt) {
        // Sample the cubic through chords and see whether the root of the
        // discriminant vanishes at every sampled point.
        const auto pts = basis.config.normalized_points();
        const auto samples =
            cubic_chord_points(cubic.projective_coeffs, std::vector<ProjPoint>(pts.begin(), pts.end()), 12);
        std::size_t in_chart = 0;
        std::size_t on_root = 0;
        for (const auto& p : samples) {
          const auto c = to_chart(p);
          if (!c) continue;
          ++in_chart;
          if (sgn(eval(*red.sqrt, std::vector<Rat>{c->x, c->y})) == 0) ++on_root;
        }
        entry["cubic"]["sampled_points"] = in_chart;
        entry["cubic"]["sampled_points_on_sqrt"] = on_root;
        cubic_ok = cubic_ok && in_chart > 0 && on_root == in_chart;
      }
    }
    list.push_back(entry);
    checks.add("special_directions.reducible[" + std::to_string(d.i) + "]", red.reducible, to_string(d.direction));
  }
  bool distinct = dirs.size() == 5;
  for (std::size_t a = 0; a < seen.size(); ++a) {
    for (std::size_t b = a + 1; b < seen.size(); ++b) distinct = distinct && !(seen[a] == seen[b]);
  }
  checks.add("special_directions.five_distinct", distinct, std::to_string(dirs.size()) + " directions");
  checks.add("special_directions.cubic_matches_sqrt", cubic_ok, "sampled points of the cubic lie on the root");
  return {dirs, list};
}

std::vector<PDir> directions_of(const std::vector<SpecialDirection>& dirs) {
  std::vector<PDir> out;
  for (const auto& d : dirs) out.push_back(d.direction);
  return out;
}

Json dictionary_part(const std::vector<SpecialDirection>& dirs, std::span<const Rat> theta, CheckList& checks) {
  const auto pdirs = directions_of(dirs);
  const DictionaryMatch m = basis_dictionary(pdirs, theta);
  Json j = {{"found", m.found}, {"consistent_permutations", m.consistent_permutations}};
  if (m.found) {
    Json perm = Json::array();
    for (auto p : m.permutation) perm.push_back(p + 1);
    j["permutation"] = perm;
    j["mobius"] = matrix_json(m.map->m);
    j["held_out_residuals"] = rat_array(m.held_out_residuals);
  }
  checks.add("dictionary.match_found", m.found, std::to_string(m.consistent_permutations) + " consistent permutations");
  if (m.found) {
    const bool zero = sgn(m.held_out_residuals[0]) == 0 && sgn(m.held_out_residuals[1]) == 0;
    checks.add("dictionary.held_out_residuals_zero", zero, "");
    // Cross-ratios of the first four directions against their partners.
    std::array<PDir, 4> src;
    std::array<PDir, 4> dst;
    for (std::size_t k = 0; k < 4; ++k) {
      src[k] = pdirs[k];
      dst[k] = make_pdir(Rat(1), theta[m.permutation[k]]);
    }
    const Rat c1 = cross_ratio(src[0], src[1], src[2], src[3]);
    const Rat c2 = cross_ratio(dst[0], dst[1], dst[2], dst[3]);
    checks.add("dictionary.cross_ratio", c1 == c2, to_string(c1) + " vs " + to_string(c2));
  }
  return j;
}

Json pencil_part(std::span<const Rat> theta, CheckList& checks) {
  const QuadricPencil pencil = standard_dp4_quadrics(theta);
  const upoly::Coeffs cp = characteristic_coeffs(pencil);
  std::vector<Rat> roots = singular_members(pencil);
  std::vector<Rat> sorted(theta.begin(), theta.end());
  std::sort(sorted.begin(), sorted.end());
  bool multiset_ok = upoly::degree(cp) == 5 && roots == sorted;
  for (const auto& r : roots) multiset_ok = multiset_ok && upoly::root_multiplicity(cp, r) == 1;
  Json coranks = Json::array();
  bool corank_ok = true;
  for (const auto& r : roots) {
    const auto c = corank_at(pencil, r);
    corank_ok = corank_ok && c == 1;
    coranks.push_back(c);
  }
  checks.add("pencil.roots_are_theta", multiset_ok, join_rats(roots));
  checks.add("pencil.corank_one", corank_ok, "");

  const auto norm = det_normalized(pencil);
  Json verts = Json::array();
  for (const auto& p : veronese_points(theta)) verts.push_back(to_json(p));
  return {{"Q1", matrix_json(pencil.Q1)},
          {"Q2", matrix_json(pencil.Q2)},
          {"characteristic_polynomial", rat_array(cp)},
          {"singular_members", rat_array(roots)},
          {"coranks", coranks},
          {"det_one_normalization", norm.has_value()},
          {"veronese_points", verts}};
}

Json lines_part(CheckList& checks) {
  const auto lines = enumerate_lines();
  std::set<DivisorClass> named;
  Json list = Json::array();
  for (const auto& l : lines) {
    named.insert(l.cls);
    list.push_back({{"name", l.name}, {"class", to_string(l.cls)}});
  }
  const auto search = lattice_search_lines();
  const std::set<DivisorClass> found(search.begin(), search.end());
  checks.add("lines.lattice_search", search.size() == 16 && found == named,
             std::to_string(search.size()) + " classes found");

  bool partition_ok = true;
  bool fibers_ok = true;
  Json fibrations = Json::array();
  const auto fibs = conic_fibrations();
  for (int i = 1; i <= 5; ++i) {
    std::multiset<std::string> names;
    for (const auto& f : fibs) {
      if (f.i != i) continue;
      const bool fiber_numbers = intersect(f.fiber, f.fiber) == 0 && intersect(f.fiber, anticanonical()) == 2;
      fibers_ok = fibers_ok && fiber_numbers && f.singular_fibers.size() == 4;
      Json singular = Json::array();
      for (const auto& pr : f.singular_fibers) {
        names.insert(pr[0]);
        names.insert(pr[1]);
        fibers_ok = fibers_ok && line_class(pr[0]) + line_class(pr[1]) == f.fiber;
        singular.push_back(Json::array({pr[0], pr[1]}));
      }
      fibrations.push_back({{"i", f.i}, {"j", f.j}, {"fiber", to_string(f.fiber)}, {"singular_fibers", singular}});
    }
    std::multiset<std::string> all;
    for (const auto& l : lines) all.insert(l.name);
    partition_ok = partition_ok && names == all;
  }
  checks.add("lines.fibrations_partition_lines", partition_ok, "singular fibers of both fibrations per index");
  checks.add("lines.fiber_classes", fibers_ok, "F^2 = 0, F.(-K) = 2, each singular fiber sums to F");
  return {{"lines", list}, {"conic_fibrations", fibrations}};
}

Json numerology_part(CheckList& checks) {
  const ZetaNumerology z = zeta_numerology(4, 8);
  bool vmrt_ok = true;
  for (int i = 1; i <= 5; ++i) vmrt_ok = vmrt_ok && vmrt_class_sum(i);
  checks.add("numerology.zeta_cubed", z.zeta_cubed == -4, std::to_string(z.zeta_cubed));
  checks.add("numerology.base_multiplicity_one", z.evenly_divided && z.base_multiplicity == 1,
             std::to_string(z.base_sum) + " over 16 points");
  checks.add("numerology.euler", z.euler_blowup == 48, std::to_string(z.euler_blowup));
  checks.add("numerology.vmrt_sum", vmrt_ok, "class sums equal 2 zeta for every i");
  return {{"zeta_cubed", z.zeta_cubed},
          {"base_sum", z.base_sum},
          {"base_multiplicity", z.base_multiplicity},
          {"euler_blowup", z.euler_blowup}};
}

bool generic_fiber_ok(const FiberReport& r) {
  return r.status == FiberStatus::four_points && r.solution_count == 4 && r.involution_pairs.size() == 2;
}

ChartPoint random_chart_point(Rng& rng, const PointConfig& config) {
  while (true) {
    const ChartPoint p{rng.rational(20), rng.rational(20)};
    if (off_line_locus(config, from_chart(p))) return p;
  }
}

PDir random_direction(Rng& rng) { return make_pdir(Rat(1), rng.rational(20)); }

bool is_special(const PDir& d, const std::vector<SpecialDirection>& dirs) {
  return std::any_of(dirs.begin(), dirs.end(), [&](const SpecialDirection& s) { return s.direction == d; });
}

// Grid of whole_line outcomes over every node and every special direction.
Json whole_line_grid(const SectionBasis& basis, const std::vector<SpecialDirection>& dirs, CheckList& checks) {
  const auto nodes = chart_nodes(basis.config);
  Json grid = Json::array();
  std::size_t mismatches = 0;
  std::size_t whole = 0;
  for (const auto& n : nodes) {
    for (const auto& d : dirs) {
      const FiberReport r = fiber_count_at(basis, d.direction.e1, d.direction.e2, n.point);
      const bool is_whole = r.status == FiberStatus::whole_line;
      whole += is_whole ? 1 : 0;
      if (is_whole != (n.i == d.i)) ++mismatches;
      grid.push_back({{"node", node_json(n)}, {"direction_index", d.i}, {"status", to_string(r.status)}});
    }
  }
  checks.add("fibers.whole_line_exactly_at_witnesses", mismatches == 0 && whole == 15,
             std::to_string(nodes.size()) + " nodes x " + std::to_string(dirs.size()) + " directions, " +
                 std::to_string(whole) + " whole_line");
  return grid;
}

Json generic_fibers(const SectionBasis& basis, const std::vector<SpecialDirection>& dirs, Rng& rng, std::size_t n,
                    CheckList& checks) {
  Json list = Json::array();
  std::size_t good = 0;
  for (std::size_t k = 0; k < n; ++k) {
    PDir e = random_direction(rng);
    while (is_special(e, dirs)) e = random_direction(rng);
    const ChartPoint x0 = random_chart_point(rng, basis.config);
    const FiberReport r = fiber_count(basis, e.e1, e.e2, x0);
    good += generic_fiber_ok(r) ? 1 : 0;
    list.push_back(to_json(r));
  }
  checks.add("fibers.generic_four_points", good == n, std::to_string(good) + "/" + std::to_string(n) +
                                                          " four_points with a free involution");
  return list;
}

Json reducibility_table(const SectionBasis& basis, const std::vector<SpecialDirection>& dirs, Rng& rng,
                        std::vector<PDir>& generic_out, CheckList& checks) {
  std::vector<PDir> sample = directions_of(dirs);
  while (sample.size() < 15) {
    const PDir e = random_direction(rng);
    if (std::find(sample.begin(), sample.end(), e) != sample.end()) continue;
    sample.push_back(e);
    generic_out.push_back(e);
  }
  Json table = Json::array();
  std::size_t reducible = 0;
  bool matches = true;
  for (const auto& e : sample) {
    const bool red = reducibility_test(basis, e.e1, e.e2).reducible;
    const bool special = is_special(e, dirs);
    reducible += red ? 1 : 0;
    matches = matches && red == special;
    table.push_back({{"direction", to_json(e)}, {"special", special}, {"reducible", red}});
  }
  checks.add("reducibility.exactly_special", matches && reducible == 5,
             std::to_string(reducible) + " reducible among " + std::to_string(sample.size()));
  return table;
}

Json tangency_part(const SectionBasis& basis, const PDir& e, CheckList& checks) {
  Json list = Json::array();
  bool ok = true;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      const TangencyReport t = line_tangency_check(basis, e.e1, e.e2, i, j);
      const bool line_ok = t.repeated_degree >= 1 && t.repeated_degree != SIZE_MAX && t.witnesses_on_curve;
      ok = ok && line_ok;
      list.push_back({{"line", line_name(i, j)},
                      {"order_at_pi", t.order_at_pi},
                      {"order_at_pj", t.order_at_pj},
                      {"repeated_degree", t.repeated_degree},
                      {"witnesses", rat_array(t.witnesses)}});
    }
  }
  checks.add("tangency.repeated_root_on_each_line", ok, "direction " + to_string(e));
  return {{"direction", to_json(e)}, {"lines", list}};
}

Json branch_part(std::span<const Rat> theta, CheckList& checks) {
  Rat theta6 = *std::max_element(theta.begin(), theta.end()) + 1;
  const BranchSpanReport r = branch_span_report(theta, theta6);
  const auto pts = diagonal_model_points(theta, 12, 4);
  checks.add("branch.contains_pencil", r.three_rank == 3 && r.containment_rank == 3,
             "pencil pair lies in the span of the three branch quadrics");
  checks.add("branch.model_points_found", !pts.empty(), std::to_string(pts.size()) + " points of X");
  return {{"theta6", to_json(theta6)},
          {"pencil_rank", r.pencil_rank},
          {"three_rank", r.three_rank},
          {"containment_rank", r.containment_rank}};
}

// Random general-position configurations given by five points.
std::vector<std::array<ProjPoint, 5>> random_point_configs(Rng& rng, std::size_t n) {
  std::vector<std::array<ProjPoint, 5>> out;
  while (out.size() < n) {
    std::array<ProjPoint, 5> pts;
    for (auto& p : pts) p = {Rat(rng.integer(-9, 9)), Rat(rng.integer(-9, 9)), Rat(rng.integer(1, 9))};
    try {
      check_general_position(pts);
    } catch (const InputError&) {
      continue;
    }
    out.push_back(pts);
  }
  return out;
}

std::vector<Rat> random_theta(Rng& rng) {
  std::vector<Rat> theta;
  while (theta.size() < 5) {
    const Rat t = rng.rational(9);
    if (std::find(theta.begin(), theta.end(), t) == theta.end()) theta.push_back(t);
  }
  return theta;
}

// Runs one pipeline stage and names it in any error that escapes.
template <class F>
auto stage(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    throw InputError(name + " stage: " + e.what());
  } catch (const CheckFailure& e) {
    throw CheckFailure(name + " stage: " + e.what());
  }
}

}  // namespace

// ------------------------------------------------------------------- verbs

CommandOutput cmd_sections(const RunConfig& config) {
  CommandOutput out;
  if (config.plane_only) {
    const auto fields = kernel_fields(plane_system());
    out.result = {{"plane_only", true}, {"row_count", plane_system().size()}, {"kernel_dimension", fields.size()}};
    out.checks.add("sections.plane_dimension", fields.size() == 27, std::to_string(fields.size()));
    return out;
  }
  const auto start = Clock::now();
  SectionsPart part = sections_part(to_point_config(config), out.checks);
  out.result = part.json;
  if (config.timing) out.result["timing_ms"] = elapsed_ms(start);
  return out;
}

CommandOutput cmd_verify(const RunConfig& config) {
  CommandOutput out;
  const auto start = Clock::now();
  const PointConfig pc = to_point_config(config);
  const InvolutivityCertificate cert = involutivity_certificate(pc, config.seed, config.corrupt_basis);
  out.result = certificate_json(cert);
  out.result["config"] = to_json(pc);
  out.result["corrupted"] = config.corrupt_basis;
  add_certificate_checks(cert, out.checks, "involutivity.");
  if (config.symbolic) out.result["symbolic"] = symbolic_part(pc, out.checks);
  if (config.timing) out.result["timing_ms"] = elapsed_ms(start);
  return out;
}

CommandOutput cmd_pencil(const RunConfig& config) {
  require_theta(config, "pencil");
  CommandOutput out;
  out.result = pencil_part(config.theta, out.checks);
  out.result["lines"] = lines_part(out.checks);
  out.result["numerology"] = numerology_part(out.checks);
  out.result["branch_model"] = branch_part(config.theta, out.checks);
  return out;
}

CommandOutput cmd_probe(const RunConfig& config) {
  CommandOutput out;
  const PointConfig pc = to_point_config(config);
  const SectionBasis basis = compute_sections(pc);
  Rng rng(config.seed);
  const auto dirs = special_directions(basis);
  out.result["config"] = to_json(pc);
  out.result["discriminant_generic"] = to_json(chart_discriminant_generic(basis));
  out.result["generic_fibers"] = generic_fibers(basis, dirs, rng, 8, out.checks);
  out.result["node_grid"] = whole_line_grid(basis, dirs, out.checks);
  std::vector<PDir> generic;
  out.result["reducibility_table"] = reducibility_table(basis, dirs, rng, generic, out.checks);
  if (config.tangency) out.result["tangency"] = tangency_part(basis, generic.front(), out.checks);
  return out;
}

CommandOutput cmd_special_directions(const RunConfig& config) {
  CommandOutput out;
  const PointConfig pc = to_point_config(config);
  const SectionBasis basis = compute_sections(pc);
  out.result["config"] = to_json(pc);
  out.result["directions"] = special_part(basis, out.checks).json;
  return out;
}

CommandOutput cmd_dictionary(const RunConfig& config) {
  require_theta(config, "dictionary");
  CommandOutput out;
  const PointConfig pc = to_point_config(config);
  const SectionBasis basis = compute_sections(pc);
  const auto dirs = special_directions(basis);
  Json d = Json::array();
  for (const auto& s : dirs) d.push_back({{"i", s.i}, {"direction", to_json(s.direction)}});
  out.result["directions"] = d;
  out.result["theta"] = rat_array(config.theta);
  out.result["match"] = dictionary_part(dirs, config.theta, out.checks);
  return out;
}

CommandOutput cmd_pipeline(const RunConfig& config) {
  require_theta(config, "pipeline");
  CommandOutput out;
  CheckList& checks = out.checks;
  Rng rng(config.seed);
  Json& r = out.result;

  stage("pencil", [&] {
    const auto plane = kernel_fields(plane_system());
    checks.add("sections.plane_dimension", plane.size() == 27, std::to_string(plane.size()));
    r["pencil_summary"] = pencil_part(config.theta, checks);
    std::size_t pencil_ok = 0;
    for (std::size_t k = 0; k < 20; ++k) {
      CheckList local;
      pencil_part(random_theta(rng), local);
      pencil_ok += local.all_pass() ? 1 : 0;
    }
    checks.add("pencil.random_theta_tuples", pencil_ok == 20, std::to_string(pencil_ok) + "/20 theta tuples");
    r["numerology"] = numerology_part(checks);
    r["lines"] = lines_part(checks);
  });

  const PointConfig pc = stage("sections", [&] { return to_point_config(config); });
  SectionsPart sec = stage("sections", [&] { return sections_part(pc, checks); });
  r["sections_summary"] = sec.json;

  stage("symplectic", [&] {
    const InvolutivityCertificate cert = certify(sec.basis, config.seed);
    r["involutivity_certificate"] = certificate_json(cert);
    add_certificate_checks(cert, checks, "involutivity.");
    std::size_t dim_ok = 0;
    std::size_t inv_ok = 0;
    const auto configs = random_point_configs(rng, 20);
    for (const auto& pts : configs) {
      const PointConfig c = normalize_config(pts);
      if (section_space_dimension(c, 5) != 2) continue;
      ++dim_ok;
      inv_ok += certify(compute_sections(c), config.seed, 2).is_zero ? 1 : 0;
    }
    checks.add("sections.random_configs_dimension_2", dim_ok == configs.size(),
               std::to_string(dim_ok) + "/20 configurations");
    checks.add("involutivity.random_configs", inv_ok == configs.size(), std::to_string(inv_ok) + "/20 configurations");
    r["symbolic"] = symbolic_part(pc, checks);
  });

  stage("levels", [&] {
    const SectionBasis& basis = sec.basis;
    SpecialPart special = special_part(basis, checks);
    r["special_directions"] = special.json;
    r["generic_fibers"] = generic_fibers(basis, special.dirs, rng, 50, checks);
    r["node_grid_whole_line"] = whole_line_grid(basis, special.dirs, checks);
    std::vector<PDir> generic;
    r["reducibility_table"] = reducibility_table(basis, special.dirs, rng, generic, checks);
    r["dictionary"] = dictionary_part(special.dirs, config.theta, checks);
    r["branch_model"] = branch_part(config.theta, checks);
    r["tangency"] = tangency_part(basis, generic.front(), checks);
  });
  return out;
}

// ---------------------------------------------------------------- dispatch

int run_command(const std::string& verb, const RunConfig& config, Json& report) {
  static const std::map<std::string, CommandOutput (*)(const RunConfig&)> verbs = {
      {"sections", cmd_sections}, {"verify", cmd_verify},
      {"pencil", cmd_pencil},     {"probe", cmd_probe},
      {"special-directions", cmd_special_directions},
      {"dictionary", cmd_dictionary}, {"pipeline", cmd_pipeline}};
  report = {{"schema_version", kSchemaVersion},
            {"command", verb},
            {"input", input_json(config)},
            {"seed", config.seed},
            {"result", Json::object()},
            {"checks", Json::array()},
            {"overall_pass", false}};
  const auto it = verbs.find(verb);
  int code = 0;
  try {
    if (it == verbs.end()) throw InputError("unknown command '" + verb + "'");
    CommandOutput out = it->second(config);
    report["result"] = std::move(out.result);
    report["checks"] = out.checks.json();
    report["overall_pass"] = out.checks.all_pass();
    return out.checks.all_pass() ? 0 : 1;
  } catch (const InputError& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    code = 2;
  } catch (const CheckFailure& e) {
    report["error"] = {{"kind", "check"}, {"message", e.what()}};
    code = 1;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    code = 1;
  }
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact section, bracket and fiber computations for the plane blown up at five points", "dp4"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  RunConfig flags;
  app.add_option("--config", config_path, "JSON config with theta, points or ab");
  app.add_option("--seed", flags.seed, "seed for randomized samples")->default_val(0);
  app.add_flag("--symbolic", flags.symbolic, "add the symbolic involutivity tier");
  app.add_flag("--tangency", flags.tangency, "add the line tangency check to probe");
  app.add_option("--out", flags.out_path, "write the report here instead of stdout");
  app.add_flag("--plane-only", flags.plane_only, "sections: only the plane constraints");
  app.add_flag("--corrupt-basis", flags.corrupt_basis, "verify: perturb H before certifying");
  app.add_flag("--timing", flags.timing, "include wall-clock timings (breaks byte determinism)");

  const std::pair<const char*, const char*> verbs[] = {
      {"sections", "kernel of the constraint system and the basis H, G"},
      {"verify", "Poisson bracket certificate for H and G"},
      {"pencil", "quadric pencil, lines, fibrations and numerology (theta input only)"},
      {"probe", "fibers, node grid and discriminant reducibility"},
      {"special-directions", "the five directions from node proportionality"},
      {"dictionary", "Moebius match of special directions to the pencil parameters"},
      {"pipeline", "every check in one report"}};
  for (const auto& [verb, help] : verbs) app.add_subcommand(verb, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();

  Json report;
  int code = 0;
  try {
    RunConfig config = config_path.empty() ? default_config() : load_config_file(config_path);
    config.seed = flags.seed;
    config.symbolic = flags.symbolic;
    config.tangency = flags.tangency;
    config.plane_only = flags.plane_only;
    config.corrupt_basis = flags.corrupt_basis;
    config.timing = flags.timing;
    config.out_path = flags.out_path;
    code = run_command(verb, config, report);
  } catch (const InputError& e) {
    report = {{"schema_version", kSchemaVersion},
              {"command", verb},
              {"seed", flags.seed},
              {"result", Json::object()},
              {"checks", Json::array()},
              {"overall_pass", false},
              {"error", {{"kind", "input"}, {"message", e.what()}}}};
    code = 2;
  }

  const std::string text = report.dump(2) + "\n";
  if (flags.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(flags.out_path);
    if (!file) {
      err << "cannot write " << flags.out_path << "\n";
      return 2;
    }
    file << text;
  }
  if (report.contains("error")) err << "error: " << report["error"]["message"].get<std::string>() << "\n";
  return code;
}

}  // namespace dp4::cli
