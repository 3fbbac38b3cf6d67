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

#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dp4/errors.hpp"
#include "dp4/upoly.hpp"

namespace dp4::testing {

std::vector<Rat> random_theta(Rng& rng, long height) {
  std::vector<Rat> theta;
  while (theta.size() < 5) {
    const Rat t = rng.rational(height);
    if (std::find(theta.begin(), theta.end(), t) == theta.end()) theta.push_back(t);
  }
  return theta;
}

std::array<ProjPoint, 5> random_general_position(Rng& rng, long height) {
  while (true) {
    std::array<ProjPoint, 5> pts;
    for (auto& p : pts) p = {rng.rational(height), rng.rational(height), rng.rational(height)};
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i) {
      ok = !is_zero(pts[i]);
      for (std::size_t j = i + 1; j < 5 && ok; ++j) {
        for (std::size_t k = j + 1; k < 5 && ok; ++k) ok = sgn(det3(pts[i], pts[j], pts[k])) != 0;
      }
    }
    if (ok) return pts;
  }
}

RatMatrix random_invertible3(Rng& rng, long height) {
  while (true) {
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rat(rng.integer(-height, height));
    }
    if (sgn(leibniz_det(to_rows(m))) != 0) return m;
  }
}

MPoly random_mpoly(Rng& rng, const VarTablePtr& vars, std::size_t terms, unsigned max_degree, long height) {
  MPoly p(vars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(vars->size(), 0);
    unsigned budget = static_cast<unsigned>(rng.integer(0, max_degree));
    for (std::size_t k = 0; k < e.size() && budget > 0; ++k) {
      const auto take = static_cast<unsigned>(rng.integer(0, budget));
      e[k] = take;
      budget -= take;
    }
    if (budget > 0) e.back() += budget;
    p.add_term(e, rng.rational(height));
  }
  return p;
}

SymField random_symfield(Rng& rng, long height) {
  RatVector slots(kSlotCount, Rat(0));
  for (auto& s : slots) {
    if (rng.integer(0, 2) == 0) s = rng.rational(height);
  }
  return from_slots(slots);
}

SymField random_plane_field(Rng& rng, long height) {
  static const std::vector<SymField> basis = kernel_fields(plane_system());
  SymField out;
  for (const auto& f : basis) {
    if (rng.integer(0, 1) == 0) out = out + rng.rational(height) * f;
  }
  return out;
}

RatMatrix random_matrix_of_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, long height) {
  RatMatrix left(rows, r);
  RatMatrix right(r, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < r; ++k) left(i, k) = Rat(rng.integer(-height, height));
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < cols; ++j) right(k, j) = Rat(rng.integer(-height, height));
  }
  return left * right;
}

Rows to_rows(const RatMatrix& m) {
  Rows out(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kPrime); }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

u64 reduce(const Int& z) {
  Int r = z % Int(std::to_string(kPrime));
  if (r < 0) r += Int(std::to_string(kPrime));
  return std::stoull(r.get_str());
}

u64 to_mod(const Rat& q) {
  const u64 den = reduce(q.get_den());
  if (den == 0) throw std::runtime_error("denominator divisible by the oracle prime");
  return mulmod(reduce(q.get_num()), powmod(den, kPrime - 2));
}

}  // namespace

std::size_t rank_mod_p(const Rows& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<u64>> m;
  for (const auto& r : rows) {
    std::vector<u64> v;
    for (const auto& q : r) v.push_back(to_mod(q));
    m.push_back(v);
  }
  const std::size_t n = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const u64 inv = powmod(m[rank][c], kPrime - 2);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const u64 f = mulmod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + kPrime - mulmod(f, m[rank][j])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Rows& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rows naive_nullspace(const Rows& rows) {
  Rows m = rows;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  const auto pivots = gauss_jordan(m);
  Rows out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    out.push_back(v);
  }
  return out;
}

std::size_t naive_rank(const Rows& rows) {
  Rows m = rows;
  return gauss_jordan(m).size();
}

Rat leibniz_det(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Rat term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= rows[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rat partial_at(const MPoly& p, std::span<const Rat> point, std::size_t var) {
  const int d = std::max(p.total_degree(), 1);
  // Lagrange basis derivatives at 0 for nodes 0..d.
  std::vector<Rat> values;
  for (int k = 0; k <= d; ++k) {
    std::vector<Rat> q(point.begin(), point.end());
    q[var] += k;
    values.push_back(eval(p, q));
  }
  // Derivative at 0 of the Lagrange basis polynomial l_j on nodes 0..d.
  Rat out = 0;
  for (int j = 0; j <= d; ++j) {
    Rat deriv = 0;
    if (j == 0) {
      for (int m = 1; m <= d; ++m) deriv -= make_rat(1, m);
    } else {
      deriv = make_rat(1, j);
      for (int m = 1; m <= d; ++m) {
        if (m != j) deriv *= make_rat(-m, j - m);
      }
    }
    out += deriv * values[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<Rat> brute_rational_roots(const std::vector<Rat>& coeffs) {
  // Clear denominators.
  Int l = 1;
  for (const auto& c : coeffs) l = lcm(l, Int(c.get_den()));
  std::vector<Int> z;
  for (const auto& c : coeffs) z.push_back(Int(c * l));
  std::size_t lo = 0;
  while (lo < z.size() && z[lo] == 0) ++lo;
  std::vector<Rat> roots;
  if (lo > 0) roots.push_back(Rat(0));
  if (lo + 1 >= z.size()) return roots;
  auto divisors = [](Int n) {
    n = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d <= n; ++d) {
      if (n % d == 0) out.push_back(d);
    }
    return out;
  };
  const auto ps = divisors(z[lo]);
  const auto qs = divisors(z.back());
  auto value = [&](const Rat& t) {
    Rat acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
  };
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int s : {1, -1}) {
        Rat t(s * p, q);
        t.canonicalize();
        if (sgn(value(t)) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rat cross_ratio_formula(const PDir& a, const PDir& b, const PDir& c, const PDir& d) {
  auto br = [](const PDir& p, const PDir& q) -> Rat { return p.e1 * q.e2 - p.e2 * q.e1; };
  return (br(a, c) * br(b, d)) / (br(a, d) * br(b, c));
}

RatMatrix frame_oracle(const std::array<ProjPoint, 4>& from, const std::array<ProjPoint, 4>& to) {
  // Unknowns: the 9 entries of T and scalars l1..l4 with T from_k = l_k to_k.
  Rows sys;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Rat> row(13, Rat(0));
      for (std::size_t j = 0; j < 3; ++j) row[3 * i + j] = from[k][j];
      row[9 + k] = -to[k][i];
      sys.push_back(row);
    }
  }
  const Rows ns = naive_nullspace(sys);
  if (ns.size() != 1) throw std::runtime_error("frame oracle: points not in general position");
  RatMatrix t(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = ns[0][3 * i + j];
  }
  return t;
}

}  // namespace dp4::testing
