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

#include "dp4/upoly.hpp"

#include <algorithm>

#include "dp4/errors.hpp"

namespace dp4::upoly {

void trim(Coeffs& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Coeffs& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

Coeffs from_mpoly(const MPoly& p, std::size_t var) {
  Coeffs out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) throw InputError("polynomial is not univariate in '" + p.vars()->name(var) + "'");
    }
    if (out.size() <= e[var]) out.resize(e[var] + 1, Rat(0));
    out[e[var]] += c;
  }
  trim(out);
  return out;
}

MPoly to_mpoly(const Coeffs& p, const VarTablePtr& vars, std::size_t var) {
  MPoly out(vars);
  Exponents e(vars->size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    e[var] = static_cast<std::uint32_t>(i);
    out.add_term(e, p[i]);
  }
  return out;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) { return add(a, scale(b, -1)); }

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Coeffs scale(const Coeffs& a, const Rat& c) {
  Coeffs out = a;
  for (auto& x : out) x *= c;
  trim(out);
  return out;
}

Coeffs derivative(const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
  trim(out);
  return out;
}

Coeffs monic(const Coeffs& a) {
  Coeffs t = a;
  trim(t);
  if (t.empty()) return t;
  return scale(t, 1 / Rat(t.back()));
}

Rat eval(const Coeffs& p, const Rat& t) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) {
  Coeffs den = b;
  trim(den);
  if (den.empty()) throw InputError("polynomial division by zero");
  Coeffs rem = a;
  trim(rem);
  if (rem.size() < den.size()) return {{}, rem};
  Coeffs quo(rem.size() - den.size() + 1, Rat(0));
  const Rat lead = den.back();
  while (rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const Rat q = rem.back() / lead;
    quo[shift] = q;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= q * den[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

Coeffs gcd(const Coeffs& a, const Coeffs& b) {
  Coeffs x = a;
  Coeffs y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Coeffs r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

Coeffs from_roots(std::span<const Rat> roots) {
  Coeffs out{Rat(1)};
  for (const Rat& r : roots) out = mul(out, Coeffs{-r, Rat(1)});
  return out;
}

Coeffs interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw InputError("interpolation: size mismatch");
  Coeffs out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Coeffs basis{Rat(1)};
    Rat denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw InputError("interpolation: repeated abscissa");
      basis = mul(basis, Coeffs{-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    out = add(out, scale(basis, ys[i] / denom));
  }
  return out;
}

namespace {

using ZCoeffs = std::vector<Int>;

// Integer multiple of p with coprime coefficients.
ZCoeffs integer_primitive(const Coeffs& p) {
  const Int l = lcm_of_denominators(p);
  ZCoeffs out(p.size());
  Int g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * l;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& c : out) c /= g;
  return out;
}

long mod(const Int& x, long m) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

long inv_mod(long a, long m) {
  Int r;
  Int aa = a;
  Int mm = m;
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0) throw CheckFailure("no modular inverse");
  return r.get_si();
}

std::vector<long> reduce(const ZCoeffs& p, long m) {
  std::vector<long> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = mod(p[i], m);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long> rem_mod(std::vector<long> a, const std::vector<long>& b, long m) {
  const long inv = inv_mod(b.back(), m);
  while (a.size() >= b.size()) {
    const long q = (a.back() * inv) % m;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - q * b[i]) % m + m) % m;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

int gcd_degree_mod(std::vector<long> a, std::vector<long> b, long m) {
  while (!b.empty()) {
    auto r = rem_mod(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Int eval_z(const ZCoeffs& p, const Int& t, const Int& m) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * t + p[i];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// n/d with n = d r (mod m), |n|, d <= sqrt(m/2); absent if none exists.
std::optional<Rat> rational_reconstruct(const Int& r, const Int& m) {
  Int bound = sqrt(Int(m / 2));
  Int r0 = m, r1 = r;
  Int t0 = 0, t1 = 1;
  while (abs(r1) > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  return make_rat(Int(r1), Int(t1));
}

}  // namespace

std::vector<Rat> rational_roots(const Coeffs& p_in) {
  Coeffs p = p_in;
  trim(p);
  if (p.empty()) throw InputError("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  if (sgn(p.front()) == 0) {
    roots.push_back(0);
    while (!p.empty() && sgn(p.front()) == 0) p.erase(p.begin());
  }
  // Square-free part carries the same roots.
  p = divmod(p, gcd(p, derivative(p))).first;
  if (degree(p) >= 1) {
    const ZCoeffs z = integer_primitive(p);
    ZCoeffs zp(z.size() - 1);
    for (std::size_t i = 1; i < z.size(); ++i) zp[i - 1] = z[i] * static_cast<long>(i);
    long ell = 2;
    while (true) {
      ++ell;
      if (!is_prime(ell)) continue;
      if (mod(z.back(), ell) == 0) continue;
      if (gcd_degree_mod(reduce(z, ell), reduce(zp, ell), ell) == 0) break;
    }
    // A root n/d has |n| <= |a_0| and d <= |a_n|; reconstruction needs
    // the modulus above 2 max(|n|, d)^2.
    const Int height = std::max(abs(z.front()), abs(z.back()));
    const Int target = 2 * height * height;
    const Int ell_z = ell;
    for (long r0 = 0; r0 < ell; ++r0) {
      if (eval_z(z, Int(r0), ell_z) != 0) continue;
      Int r = r0;
      Int m = ell_z;
      bool lifted = true;
      while (m <= target) {
        m *= m;
        const Int fr = eval_z(z, r, m);
        const Int dr = eval_z(zp, r, m);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0) {
          lifted = false;
          break;
        }
        r -= fr * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      }
      if (!lifted) continue;
      if (auto cand = rational_reconstruct(r, m)) {
        if (sgn(eval(p, *cand)) == 0) roots.push_back(*cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

unsigned root_multiplicity(const Coeffs& p_in, const Rat& r) {
  Coeffs p = p_in;
  trim(p);
  if (p.empty()) throw InputError("root multiplicity in the zero polynomial");
  unsigned m = 0;
  const Coeffs lin{-r, Rat(1)};
  while (true) {
    auto [q, rem] = divmod(p, lin);
    if (!rem.empty()) return m;
    ++m;
    p = std::move(q);
  }
}

}  // namespace dp4::upoly
