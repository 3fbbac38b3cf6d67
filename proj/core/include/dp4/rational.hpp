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

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace dp4 {

/// Exact rational scalar. gmpxx keeps arithmetic results canonical; values
/// built from a raw numerator/denominator pair go through make_rat.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// Accepts "p/q", "p", with optional leading sign. Throws InputError.
Rat parse_rat(std::string_view text);

/// Always "p/q", even when q = 1, so that the text form is unambiguous.
std::string to_string(const Rat& value);

/// Square root in Q when it exists.
std::optional<Rat> rational_sqrt(const Rat& value);

Int lcm_of_denominators(std::span<const Rat> values);
Int gcd_of_numerators(std::span<const Rat> values);

}  // namespace dp4
