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

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "bcsys/error.hpp"

namespace bcsys::numtower {

using i64 = std::int64_t;
__extension__ using i128 = __int128;

/// Euclidean remainder in [0, m).
constexpr i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

/// ⌊a/b⌋ for b > 0.
constexpr i64 floor_div(i64 a, i64 b) { return (a - mod(a, b)) / b; }

inline i64 checked_mul(i64 a, i64 b) {
    i64 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "64-bit multiply overflow");
    return out;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "64-bit add overflow");
    return out;
}

inline i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b);
}

/// (a*b) mod m without intermediate overflow.
inline i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(mod(static_cast<i64>((static_cast<i128>(mod(a, m)) * mod(b, m)) % m), m));
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<i64> inverse_mod(i64 a, i64 m);

/// The least u' ≥ 1 with u' ≡ u mod b and gcd(u', m) = 1, for b | m and gcd(u, b) = 1.
i64 lift_unit(i64 u, i64 b, i64 m);

/// Extended gcd: returns g and sets x, y with a*x + b*y = g.
i64 extended_gcd(i64 a, i64 b, i64& x, i64& y);

struct PrimePower {
    i64 prime;
    int exponent;
};

std::vector<PrimePower> factorize(i64 n);
std::vector<i64> prime_divisors(i64 n);
std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);
i64 sigma1(i64 n);
bool is_prime(i64 n);

}  // namespace bcsys::numtower
