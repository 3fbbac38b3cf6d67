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

#include "dp4/rational.hpp"

#include <cctype>

#include "dp4/errors.hpp"

namespace dp4 {

Rat make_rat(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!is_integer_literal(s)) throw InputError("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  text = strip(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(strip(text.substr(0, slash)));
  std::string_view den_text = strip(text.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') {
    throw InputError("malformed rational: negative denominator in '" + std::string(text) + "'");
  }
  const Int den = parse_int(den_text);
  if (den == 0) throw InputError("malformed rational: zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<Rat> rational_sqrt(const Rat& value) {
  if (sgn(value) < 0) return std::nullopt;
  const Int& num = value.get_num();
  const Int& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return make_rat(Int(sqrt(num)), Int(sqrt(den)));
}

Int lcm_of_denominators(std::span<const Rat> values) {
  Int out = 1;
  for (const Rat& v : values) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den().get_mpz_t());
  return out;
}

Int gcd_of_numerators(std::span<const Rat> values) {
  Int out = 0;
  for (const Rat& v : values) mpz_gcd(out.get_mpz_t(), out.get_mpz_t(), v.get_num().get_mpz_t());
  return out;
}

}  // namespace dp4
