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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcsys/numtower/bigfloat.hpp"
#include "bcsys/numtower/qmodz.hpp"
#include "bcsys/numtower/rational.hpp"

namespace bcsys::numtower {

/// Nonzero terms (exponent, coefficient) of the N-th cyclotomic polynomial, ascending.
/// Cached process-wide; the cache is synchronized.
const std::vector<std::pair<i64, i64>>& cyclotomic_polynomial(i64 n);

/// Σ c_k ζ_N^k with rational c_k, stored sparsely as an element of Q[x]/(x^N − 1).
/// Equality and zero tests go through the canonical form modulo Φ_N.
class Cyclotomic {
public:
    using Terms = std::map<i64, Rational>;

    Cyclotomic() = default;
    explicit Cyclotomic(Rational c);
    Cyclotomic(i64 conductor, Terms terms);

    /// ζ_N^k.
    static Cyclotomic root(i64 conductor, i64 k);
    /// exp(2πi r) = ζ_b^a for r = a/b.
    static Cyclotomic from_qmodz(const QmodZ& r);

    i64 conductor() const { return conductor_; }
    const Terms& terms() const { return terms_; }

    /// The same number written at a multiple of the conductor.
    Cyclotomic raise(i64 new_conductor) const;
    /// Reduced modulo Φ_N: only exponents below φ(N) survive.
    Cyclotomic canonical() const;
    bool is_zero() const;
    bool is_one() const { return *this == Cyclotomic(Rational(1)); }
    /// The rational value if the number is rational.
    std::optional<Rational> as_rational() const;

    Cyclotomic conj() const;
    /// ζ_N ↦ ζ_N^u; throws NonInvertible unless gcd(u, N) = 1.
    Cyclotomic galois(i64 u) const;
    /// Complex value under ζ_N ↦ exp(2πiu/N).
    BigComplex embed(i64 u, long precision) const;
    BigComplex embed(long precision) const { return embed(1, precision); }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& c);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& c) { return a *= c; }
    friend Cyclotomic operator*(const Rational& c, Cyclotomic a) { return a *= c; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Human-readable form such as "1/2*zeta_8^3 - zeta_8^1".
    std::string str() const;

private:
    i64 conductor_ = 1;
    Terms terms_;
};

inline Cyclotomic cyclotomic_mul(const Cyclotomic& x, const Cyclotomic& y) { return x * y; }
inline bool cyclotomic_eq(const Cyclotomic& x, const Cyclotomic& y) { return x == y; }

}  // namespace bcsys::numtower
