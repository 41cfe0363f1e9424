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

#include <vector>

#include "bcsys/numtower/bigfloat.hpp"

namespace bcsys::numtower {

/// B_0, …, B_{count−1} as exact rationals (B_1 = −1/2).
std::vector<Rational> bernoulli_numbers(int count);

/// ζ(s, a) = Σ_{n≥0} (n+a)^{−s} for real s > 1 and rational a > 0, by Euler–Maclaurin.
/// The bound covers the truncated series rigorously plus a rounding estimate.
Bounded hurwitz_zeta(const BigReal& s, const Rational& a, long precision = kDefaultPrecision);

inline Bounded riemann_zeta(const BigReal& s, long precision = kDefaultPrecision) {
    return hurwitz_zeta(s, Rational(1), precision);
}

}  // namespace bcsys::numtower
