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

#include "dp4/pencil.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dp4/errors.hpp"

namespace dp4 {

QuadricPencil make_pencil(RatMatrix q1, RatMatrix q2) {
  for (const RatMatrix* q : {&q1, &q2}) {
    if (q->rows() != 5 || q->cols() != 5) throw InputError("pencil matrices must be 5x5");
    if (!q->is_symmetric()) throw InputError("pencil matrices must be symmetric");
  }
  if (sgn(determinant(q1)) == 0) throw InputError("det Q1 = 0");
  return {std::move(q1), std::move(q2)};
}

upoly::Coeffs characteristic_coeffs_raw(const QuadricPencil& pencil) {
  // det(t Q1 - Q2) has degree <= 5; six samples determine it.
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  for (long t = 0; t <= 5; ++t) {
    xs.emplace_back(t);
    ys.push_back(determinant(Rat(t) * pencil.Q1 - pencil.Q2));
  }
  return upoly::interpolate(xs, ys);
}

upoly::Coeffs characteristic_coeffs(const QuadricPencil& pencil) {
  const Rat d = determinant(pencil.Q1);
  if (sgn(d) == 0) throw InputError("det Q1 = 0");
  upoly::Coeffs p = upoly::scale(characteristic_coeffs_raw(pencil), 1 / d);
  if (upoly::degree(upoly::gcd(p, upoly::derivative(p))) > 0) throw CheckFailure("pencil not generic");
  return p;
}

MPoly characteristic_polynomial(const QuadricPencil& pencil) {
  static const VarTablePtr t_only = VarTable::make({"t"});
  return upoly::to_mpoly(characteristic_coeffs(pencil), t_only, 0);
}

std::optional<QuadricPencil> det_normalized(const QuadricPencil& pencil) {
  const Rat d = determinant(pencil.Q1);
  if (sgn(d) == 0) return std::nullopt;
  // c^5 d = 1, so c = d^(-1/5) must be rational.
  const Rat target = 1 / d;
  Int num_root, den_root;
  const bool num_exact = mpz_root(num_root.get_mpz_t(), target.get_num_mpz_t(), 5) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), target.get_den_mpz_t(), 5) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  const Rat c = make_rat(num_root, den_root);
  return QuadricPencil{c * pencil.Q1, c * pencil.Q2};
}

void require_distinct(std::span<const Rat> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) throw InputError("repeated parameter " + to_string(values[i]));
    }
  }
}

QuadricPencil standard_dp4_quadrics(std::span<const Rat> theta) {
  if (theta.size() != 5) throw InputError("expected five parameters");
  require_distinct(theta);
  const upoly::Coeffs dp = upoly::derivative(upoly::from_roots(theta));
  RatVector d1(5), d2(5);
  for (std::size_t i = 0; i < 5; ++i) {
    d1[i] = 1 / upoly::eval(dp, theta[i]);
    d2[i] = d1[i] * theta[i];
  }
  return make_pencil(RatMatrix::diagonal(d1), RatMatrix::diagonal(d2));
}

std::vector<Rat> singular_members(const QuadricPencil& pencil) {
  const upoly::Coeffs p = characteristic_coeffs(pencil);
  std::vector<Rat> roots = upoly::rational_roots(p);
  if (roots.size() != 5) {
    const upoly::Coeffs rest = upoly::divmod(p, upoly::from_roots(roots)).first;
    std::string found;
    for (const auto& r : roots) found += (found.empty() ? "" : ", ") + to_string(r);
    static const VarTablePtr t_only = VarTable::make({"t"});
    throw CheckFailure("rational-root regime only: rational roots [" + found + "], remaining factor " +
                       upoly::to_mpoly(rest, t_only, 0).to_string());
  }
  for (const Rat& r : roots) {
    if (sgn(determinant(r * pencil.Q1 - pencil.Q2)) != 0) throw CheckFailure("root is not a singular member");
  }
  return roots;
}

std::size_t corank_at(const QuadricPencil& pencil, const Rat& theta) {
  return 5 - rank(theta * pencil.Q1 - pencil.Q2);
}

std::array<ProjPoint, 5> veronese_points(std::span<const Rat> theta) {
  if (theta.size() != 5) throw InputError("expected five parameters");
  require_distinct(theta);
  std::array<ProjPoint, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = {Rat(1), theta[i], theta[i] * theta[i]};
  return out;
}

// ---------------------------------------------------------------- lines

int intersect(const DivisorClass& a, const DivisorClass& b) {
  int s = a.d * b.d;
  for (std::size_t i = 0; i < 5; ++i) s -= a.m[i] * b.m[i];
  return s;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass c{a.d + b.d, {}};
  for (std::size_t i = 0; i < 5; ++i) c.m[i] = a.m[i] + b.m[i];
  return c;
}

DivisorClass anticanonical() { return {3, {-1, -1, -1, -1, -1}}; }

std::string to_string(const DivisorClass& c) {
  std::string s = std::to_string(c.d) + "L";
  for (std::size_t i = 0; i < 5; ++i) {
    if (c.m[i] == 0) continue;
    s += (c.m[i] > 0 ? " + " : " - ");
    if (std::abs(c.m[i]) != 1) s += std::to_string(std::abs(c.m[i]));
    s += "E" + std::to_string(i + 1);
  }
  return s;
}

std::vector<NamedLine> enumerate_lines() {
  std::vector<NamedLine> out;
  out.push_back({"C", {2, {-1, -1, -1, -1, -1}}});
  for (int i = 0; i < 5; ++i) {
    DivisorClass e{0, {}};
    e.m[i] = 1;
    out.push_back({"E" + std::to_string(i + 1), e});
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      DivisorClass l{1, {}};
      l.m[i] = -1;
      l.m[j] = -1;
      out.push_back({line_name(i + 1, j + 1), l});
    }
  }
  return out;
}

std::vector<DivisorClass> lattice_search_lines() {
  std::vector<DivisorClass> out;
  const DivisorClass k = anticanonical();
  for (int d = -2; d <= 2; ++d) {
    for (int code = 0; code < 243; ++code) {
      DivisorClass c{d, {}};
      int rest = code;
      for (int i = 0; i < 5; ++i) {
        c.m[i] = rest % 3 - 1;
        rest /= 3;
      }
      if (intersect(c, c) == -1 && intersect(c, k) == 1) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string line_name(int i, int j) {
  if (i == j || i < 1 || j < 1 || i > 5 || j > 5) throw InputError("bad line indices");
  if (i > j) std::swap(i, j);
  return "l" + std::to_string(i) + std::to_string(j);
}

const DivisorClass& line_class(const std::string& name) {
  static const std::map<std::string, DivisorClass> table = [] {
    std::map<std::string, DivisorClass> t;
    for (const auto& l : enumerate_lines()) t.emplace(l.name, l.cls);
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown line '" + name + "'");
  return it->second;
}

std::array<std::array<std::array<int, 2>, 2>, 3> pairings(const std::array<int, 4>& l) {
  return {{{{{l[0], l[1]}, {l[2], l[3]}}}, {{{l[0], l[2]}, {l[1], l[3]}}}, {{{l[0], l[3]}, {l[1], l[2]}}}}};
}

std::vector<ConicFibration> conic_fibrations() {
  std::vector<ConicFibration> out;
  for (int i = 1; i <= 5; ++i) {
    std::array<int, 4> others{};
    int n = 0;
    for (int k = 1; k <= 5; ++k) {
      if (k != i) others[n++] = k;
    }

    ConicFibration first{i, 1, {1, {}}, {}};
    first.fiber.m[i - 1] = -1;
    for (int k : others) first.singular_fibers.push_back({line_name(k, i), "E" + std::to_string(k)});
    out.push_back(first);

    ConicFibration second{i, 2, {2, {-1, -1, -1, -1, -1}}, {}};
    second.fiber.m[i - 1] = 0;
    for (const auto& pr : pairings(others)) {
      second.singular_fibers.push_back({line_name(pr[0][0], pr[0][1]), line_name(pr[1][0], pr[1][1])});
    }
    second.singular_fibers.push_back({"C", "E" + std::to_string(i)});
    out.push_back(second);
  }
  return out;
}

// ---------------------------------------------------------------- numerology

ZetaNumerology zeta_numerology(long k_squared, long c2) {
  ZetaNumerology z;
  // Multiply zeta^2 + K zeta + c2 = 0 by zeta and substitute zeta^2 again;
  // K c2 vanishes and K^2 zeta, c2 zeta have degree K^2, c2.
  z.zeta_cubed = k_squared - c2;
  // (2 zeta)^2 zeta = -sum a_i over the 16 sections.
  z.base_sum = -4 * z.zeta_cubed;
  z.evenly_divided = z.base_sum % 16 == 0;
  z.base_multiplicity = z.base_sum / 16;
  z.euler_blowup = 2 * c2 + 2 * 16;
  return z;
}

TautClass vmrt_class(int i, int j) {
  if (i < 1 || i > 5 || (j != 1 && j != 2)) throw InputError("bad VMRT index");
  const long s = j == 1 ? 1 : -1;
  TautClass c{1, -s, s, s, s, s, s};
  c[static_cast<std::size_t>(1 + i)] -= 2 * s;
  return c;
}

bool vmrt_class_sum(const TautClass& c1, const TautClass& c2) {
  for (std::size_t k = 0; k < 7; ++k) {
    if (c1[k] + c2[k] != (k == 0 ? 2 : 0)) return false;
  }
  return true;
}

bool vmrt_class_sum(int i) { return vmrt_class_sum(vmrt_class(i, 1), vmrt_class(i, 2)); }

// ---------------------------------------------------------------- dictionary

namespace {

Rat bracket(const PDir& p, const PDir& q) { return p.e1 * q.e2 - p.e2 * q.e1; }

}  // namespace

PDir Mobius::apply(const PDir& d) const {
  return make_pdir(m(0, 0) * d.e1 + m(0, 1) * d.e2, m(1, 0) * d.e1 + m(1, 1) * d.e2);
}

std::optional<Mobius> fit_mobius(std::span<const PDir> src, std::span<const PDir> dst) {
  if (src.size() != 3 || dst.size() != 3) throw InputError("a Möbius map is fixed by three pairs");
  // [M s, d] = 0 is linear in the four entries of M.
  RatMatrix sys(3, 4);
  for (std::size_t k = 0; k < 3; ++k) {
    sys(k, 0) = src[k].e1 * dst[k].e2;
    sys(k, 1) = src[k].e2 * dst[k].e2;
    sys(k, 2) = -src[k].e1 * dst[k].e1;
    sys(k, 3) = -src[k].e2 * dst[k].e1;
  }
  const auto ker = kernel(sys);
  if (ker.size() != 1) return std::nullopt;
  Mobius mob{RatMatrix(2, 2)};
  mob.m(0, 0) = ker[0][0];
  mob.m(0, 1) = ker[0][1];
  mob.m(1, 0) = ker[0][2];
  mob.m(1, 1) = ker[0][3];
  if (sgn(determinant(mob.m)) == 0) return std::nullopt;
  return mob;
}

Rat cross_ratio(const PDir& a, const PDir& b, const PDir& c, const PDir& d) {
  const Rat den = bracket(a, d) * bracket(b, c);
  if (sgn(den) == 0) throw InputError("cross-ratio of coincident points");
  return bracket(a, c) * bracket(b, d) / den;
}

DictionaryMatch basis_dictionary(std::span<const PDir> directions, std::span<const Rat> theta) {
  if (directions.size() != 5 || theta.size() != 5) throw InputError("dictionary needs five directions and five parameters");
  require_distinct(theta);
  DictionaryMatch out;
  std::array<std::size_t, 5> perm{0, 1, 2, 3, 4};
  do {
    std::array<PDir, 5> target;
    for (std::size_t k = 0; k < 5; ++k) target[k] = make_pdir(Rat(1), theta[perm[k]]);
    const auto mob = fit_mobius(directions.subspan(0, 3), std::span<const PDir>(target).subspan(0, 3));
    if (!mob) continue;
    std::array<Rat, 2> residuals;
    for (std::size_t k = 3; k < 5; ++k) {
      const Rat e1 = mob->m(0, 0) * directions[k].e1 + mob->m(0, 1) * directions[k].e2;
      const Rat e2 = mob->m(1, 0) * directions[k].e1 + mob->m(1, 1) * directions[k].e2;
      residuals[k - 3] = e1 * target[k].e2 - e2 * target[k].e1;
    }
    if (sgn(residuals[0]) != 0 || sgn(residuals[1]) != 0) continue;
    ++out.consistent_permutations;
    if (!out.found) {
      out.found = true;
      out.permutation = perm;
      out.map = mob;
      out.held_out_residuals = residuals;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace dp4
