/*
   Copyright 2026 The bcsys Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "bcsys/numtower/arith.hpp"

namespace bcsys::numtower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in canonical form. q must be nonzero.
Rational make_rational(i64 p, i64 q = 1);

/// Parses "p/q", "p", or an exact decimal such as "-0.125" into a Rational.
/// Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Narrowing conversions; throw Overflow if the value does not fit.
i64 to_i64(const Integer& z);
i64 numerator_i64(const Rational& q);
i64 denominator_i64(const Rational& q);

}  // namespace bcsys::numtower
