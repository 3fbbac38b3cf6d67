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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

/// Ordered list of variable names. The order fixes the monomial order.
class VarTable {
 public:
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws InputError for unknown names.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;
using Exponents = std::vector<std::uint32_t>;
using Assignment = std::map<std::string, Rat, std::less<>>;

/// Graded reverse lexicographic order, largest first.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint32_t total_degree(const Exponents& e);

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored, so structural equality is mathematical
/// equality over a fixed variable table.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GrevlexGreater>;

  explicit MPoly(VarTablePtr vars);
  static MPoly constant(VarTablePtr vars, const Rat& c);
  static MPoly variable(VarTablePtr vars, std::string_view name);
  static MPoly monomial(VarTablePtr vars, Exponents exps, const Rat& c = 1);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  Rat coefficient(const Exponents& e) const;
  /// Largest term in the monomial order. Precondition: nonzero.
  const TermMap::value_type& leading_term() const;

  /// Adds c * x^e to the polynomial, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  MPoly operator-() const;
  MPoly pow(unsigned n) const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Canonical text: terms in monomial order joined by " + ", each
  /// "p/q * x^i y^j"; the zero polynomial prints as "0".
  std::string to_string() const;
  static MPoly parse(std::string_view text, VarTablePtr vars);

 private:
  void require_same_vars(const MPoly& o) const;

  VarTablePtr vars_;
  TermMap terms_;
};

/// Exact value at a point. Only variables that occur in p must be assigned;
/// a missing one raises InputError naming it.
Rat eval(const MPoly& p, const Assignment& point);
/// Values indexed like p.vars().
Rat eval(const MPoly& p, std::span<const Rat> values);

/// Substitutes values for the named variables and keeps the others.
MPoly specialize(const MPoly& p, const Assignment& partial);

MPoly derivative(const MPoly& p, std::string_view var);

/// Composition with arbitrary images; every variable of p that occurs must
/// have an image and all images share one table.
MPoly substitute(const MPoly& p, const std::map<std::string, MPoly, std::less<>>& images);
/// As substitute, but rejects images of total degree above one.
MPoly substitute_linear(const MPoly& p, const std::map<std::string, MPoly, std::less<>>& images);

/// Re-expresses p over a table that contains all of p's variables by name.
MPoly embed(const MPoly& p, const VarTablePtr& target);

/// h0^2 - 4 f0 g0, the discriminant of f0 t^2 + h0 t + g0.
MPoly binary_quadratic_discriminant(const MPoly& f0, const MPoly& h0, const MPoly& g0);

/// Quotient of an exact division; throws CheckFailure if den does not divide num.
MPoly divide_exact(const MPoly& num, const MPoly& den);

struct SquareRootResult {
  bool is_square = false;
  std::optional<MPoly> sqrt;
};

/// Decides whether p = S^2 over Q. The root is built term by term from the
/// leading terms and confirmed by squaring before it is returned; its
/// leading coefficient is positive.
SquareRootResult perfect_square_test(const MPoly& p);

/// Monic gcd of two polynomials in the single variable var.
MPoly univariate_gcd(const MPoly& p, const MPoly& q, std::string_view var);

/// Content-free integer rescaling with positive leading coefficient.
MPoly primitive_part(const MPoly& p);

}  // namespace dp4
