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

#include "dp4/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "dp4/errors.hpp"
#include "dp4/upoly.hpp"

namespace dp4 {

// ---------------------------------------------------------------- VarTable

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  return std::shared_ptr<const VarTable>(new VarTable(std::move(names)));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- order

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw InputError("null variable table");
}

MPoly MPoly::constant(VarTablePtr vars, const Rat& c) {
  MPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

MPoly MPoly::variable(VarTablePtr vars, std::string_view name) {
  MPoly p(std::move(vars));
  Exponents e(p.vars_->size(), 0);
  e[p.vars_->require(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::monomial(VarTablePtr vars, Exponents exps, const Rat& c) {
  MPoly p(std::move(vars));
  if (exps.size() != p.vars_->size()) throw InputError("exponent vector length mismatch");
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && dp4::total_degree(terms_.begin()->first) == 0);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(dp4::total_degree(terms_.begin()->first));
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

Rat MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

const MPoly::TermMap::value_type& MPoly::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return *terms_.begin();
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MPoly::require_same_vars(const MPoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) {
    throw InputError("polynomials over different variable tables");
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_vars(b);
  MPoly out(a.vars_);
  const std::size_t n = a.vars_->size();
  Exponents e(n);
  Rat prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = constant(vars_, 1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(*a.vars_ == *b.vars_)) return false;
  return a.terms_ == b.terms_;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += dp4::to_string(c);
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += first_factor ? " * " : " ";
      first_factor = false;
      out += vars_->name(i) + "^" + std::to_string(e[i]);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarTablePtr vars) : s_(text), vars_(std::move(vars)) {}

  MPoly run() {
    MPoly out(vars_);
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    while (true) {
      parse_term(out);
      skip_ws();
      if (pos_ == s_.size()) break;
      if (s_[pos_] == '-') continue;  // the sign belongs to the next term
      if (s_[pos_] != '+') fail("expected '+' or '-'");
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_ident() const {
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }

  void parse_term(MPoly& out) {
    skip_ws();
    Rat coeff = 1;
    Exponents e(vars_->size(), 0);
    bool have_coeff = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+' ||
                             std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      const bool negative = s_[pos_] == '-';
      if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      if (at_ident()) {
        // A bare sign in front of a variable.
        coeff = negative ? Rat(-1) : Rat(1);
      } else {
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                    std::isspace(static_cast<unsigned char>(s_[pos_])))) {
          if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            // Allow "3 / 4" but stop before the factor list.
            std::size_t look = pos_;
            while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
            if (look < s_.size() && (s_[look] == '/' || (s_[pos_ - 1] == '/' && std::isdigit(static_cast<unsigned char>(s_[look]))))) {
              pos_ = look;
              continue;
            }
            break;
          }
          ++pos_;
        }
        coeff = parse_rat(s_.substr(start, pos_ - start));
        if (negative) coeff = -coeff;
        have_coeff = true;
      }
    }
    skip_ws();
    if (have_coeff && pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip_ws();
      if (!at_ident()) fail("expected a variable after '*'");
    }
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*' && any_factor) {
        ++pos_;
        skip_ws();
      }
      if (!at_ident()) break;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::size_t idx = vars_->require(s_.substr(start, pos_ - start));
      std::uint32_t power = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        const std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected exponent");
        power = static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(ds, pos_ - ds))));
      }
      e[idx] += power;
      any_factor = true;
    }
    if (!have_coeff && !any_factor) fail("expected a term");
    out.add_term(e, coeff);
  }

  std::string_view s_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text, VarTablePtr vars) {
  return PolyParser(text, std::move(vars)).run();
}

// ---------------------------------------------------------------- free ops

Rat eval(const MPoly& p, std::span<const Rat> values) {
  if (values.size() != p.vars()->size()) throw InputError("point dimension mismatch");
  Rat sum = 0;
  Rat term;
  Rat power;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), values[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), values[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

Rat eval(const MPoly& p, const Assignment& point) {
  const auto& vars = *p.vars();
  std::vector<Rat> values(vars.size(), Rat(0));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars.name(i));
    if (it != point.end()) {
      values[i] = it->second;
    } else if (p.uses_variable(i)) {
      throw InputError("no value assigned to variable '" + vars.name(i) + "'");
    }
  }
  return eval(p, values);
}

MPoly specialize(const MPoly& p, const Assignment& partial) {
  const auto& vars = *p.vars();
  std::vector<std::optional<Rat>> values(vars.size());
  for (const auto& [name, v] : partial) values[vars.require(name)] = v;
  MPoly out(p.vars());
  Rat power;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    Rat coeff = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!values[i] || e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), values[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), values[i]->get_den_mpz_t(), e[i]);
      coeff *= power;
      ne[i] = 0;
    }
    out.add_term(ne, coeff);
  }
  return out;
}

MPoly derivative(const MPoly& p, std::string_view var) {
  const std::size_t idx = p.vars()->require(var);
  MPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    --ne[idx];
    out.add_term(ne, c * e[idx]);
  }
  return out;
}

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly, std::less<>>& images) {
  const auto& vars = *p.vars();
  std::optional<VarTablePtr> target;
  for (const auto& [name, img] : images) {
    vars.require(name);
    if (target && !(**target == *img.vars())) throw InputError("substitution images over different tables");
    target = img.vars();
  }
  if (!target) {
    if (!p.is_constant()) throw InputError("substitution without images");
    return p;
  }
  // Cache of powers per variable.
  std::vector<std::vector<MPoly>> powers(vars.size());
  std::vector<const MPoly*> image_of(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = images.find(vars.name(i));
    if (it != images.end()) image_of[i] = &it->second;
  }
  auto power = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(*target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * *image_of[i]);
    return cache[k];
  };
  MPoly out(*target);
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(*target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!image_of[i]) throw InputError("no image for variable '" + vars.name(i) + "'");
      term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

MPoly substitute_linear(const MPoly& p, const std::map<std::string, MPoly, std::less<>>& images) {
  for (const auto& [name, img] : images) {
    if (img.total_degree() > 1) throw InputError("image of '" + name + "' is not of degree at most one");
  }
  return substitute(p, images);
}

MPoly embed(const MPoly& p, const VarTablePtr& target) {
  const auto& src = *p.vars();
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->require(src.name(i));
  MPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

MPoly binary_quadratic_discriminant(const MPoly& f0, const MPoly& h0, const MPoly& g0) {
  return h0 * h0 - Rat(4) * (f0 * g0);
}

namespace {

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponents minus(const Exponents& e, const Exponents& d) {
  Exponents out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i] - d[i];
  return out;
}

}  // namespace

MPoly divide_exact(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw InputError("division by the zero polynomial");
  if (!(*num.vars() == *den.vars())) throw InputError("polynomials over different variable tables");
  MPoly quotient(num.vars());
  MPoly rem = num;
  const auto& [lde, ldc] = den.leading_term();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    if (!divides(lde, re)) throw CheckFailure("inexact polynomial division");
    MPoly t = MPoly::monomial(num.vars(), minus(re, lde), rc / ldc);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

SquareRootResult perfect_square_test(const MPoly& p) {
  if (p.is_zero()) return {true, MPoly(p.vars())};
  const auto& [le, lc] = p.leading_term();
  for (auto x : le) {
    if (x % 2 != 0) return {false, std::nullopt};
  }
  auto root_lc = rational_sqrt(lc);
  if (!root_lc) return {false, std::nullopt};
  Exponents half(le.size());
  for (std::size_t i = 0; i < le.size(); ++i) half[i] = le[i] / 2;

  const MPoly lead = MPoly::monomial(p.vars(), half, *root_lc);
  MPoly root = lead;
  MPoly rem = p - lead * lead;
  GrevlexGreater greater;
  Exponents last = half;
  // Each new root term is strictly smaller than the previous one and has
  // degree at most deg(lead), so the loop is finite.
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    if (!divides(half, re)) return {false, std::nullopt};
    Exponents te = minus(re, half);
    if (!greater(last, te)) return {false, std::nullopt};
    const MPoly t = MPoly::monomial(p.vars(), te, rc / (*root_lc * 2));
    // (root + t)^2 = root^2 + 2 root t + t^2
    rem -= (root * Rat(2) + t) * t;
    root += t;
    last = te;
  }
  if (!(root * root == p)) return {false, std::nullopt};
  return {true, root};
}

MPoly univariate_gcd(const MPoly& p, const MPoly& q, std::string_view var) {
  if (!(*p.vars() == *q.vars())) throw InputError("polynomials over different variable tables");
  const std::size_t idx = p.vars()->require(var);
  for (std::size_t i = 0; i < p.vars()->size(); ++i) {
    if (i == idx) continue;
    if (p.uses_variable(i) || q.uses_variable(i)) {
      throw InputError("univariate_gcd: variable '" + p.vars()->name(i) + "' present besides '" +
                       std::string(var) + "'");
    }
  }
  if (p.is_zero() && q.is_zero()) throw InputError("univariate_gcd: both arguments are zero");
  const auto g = upoly::gcd(upoly::from_mpoly(p, idx), upoly::from_mpoly(q, idx));
  return upoly::to_mpoly(g, p.vars(), idx);
}

MPoly primitive_part(const MPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rat> cs;
  cs.reserve(p.size());
  for (const auto& [e, c] : p.terms()) cs.push_back(c);
  const Int l = lcm_of_denominators(cs);
  for (auto& c : cs) c *= l;
  Int g = gcd_of_numerators(cs);
  Rat scale = make_rat(l, g);
  if (sgn(p.leading_term().second) < 0) scale = -scale;
  return p * scale;
}

}  // namespace dp4
