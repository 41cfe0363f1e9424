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

#include "bcsys/numtower/arith.hpp"

#include <algorithm>

namespace bcsys::numtower {

i64 extended_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

std::optional<i64> inverse_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 x = 0, y = 0;
    if (extended_gcd(mod(a, m), m, x, y) != 1) return std::nullopt;
    return mod(x, m);
}

i64 lift_unit(i64 u, i64 b, i64 m) {
    if (b <= 0 || m % b != 0) throw Error(ErrorKind::LevelMismatch, "lift_unit needs b | m");
    if (gcd(mod(u, b), b) != 1) throw Error(ErrorKind::NonInvertible, std::to_string(u) + " is not a unit mod " + std::to_string(b));
    for (i64 v = mod(u, b) == 0 ? b : mod(u, b);; v += b)
        if (gcd(v, m) == 1) return v;
}

std::vector<PrimePower> factorize(i64 n) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "factorize expects a positive integer");
    std::vector<PrimePower> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n) {
    i64 phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

i64 sigma1(i64 n) {
    i64 s = 0;
    for (i64 d : divisors(n)) s += d;
    return s;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace bcsys::numtower
