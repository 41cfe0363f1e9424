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
#include <optional>
#include <string>
#include <vector>

#include "bcsys/bcalg/coefficient.hpp"
#include "bcsys/numtower/qmodz.hpp"

namespace bcsys::bcalg {

using numtower::QmodZ;

/// A function on R that depends only on ρ mod N.
class CylFunction {
public:
    CylFunction() = default;
    CylFunction(i64 level, std::vector<Coefficient> values);
    static CylFunction constant(i64 level, const Coefficient& c);

    i64 level() const { return static_cast<i64>(values_.size()); }
    const std::vector<Coefficient>& values() const { return values_; }
    /// Value at any residue; reduced mod the level.
    const Coefficient& at(i64 k) const { return values_[static_cast<std::size_t>(numtower::mod(k, level()))]; }
    Coefficient& operator[](i64 k) { return values_[static_cast<std::size_t>(k)]; }

    CylFunction raise(i64 new_level) const;
    bool factors_through(i64 level, const BigReal& tol) const;
    CylFunction lower(i64 new_level) const;
    bool is_zero() const;

private:
    std::vector<Coefficient> values_;
};

/// α_n f(ρ) = f(ρ/n) on nR and 0 elsewhere; the result lives at level n·N.
CylFunction alpha_action(i64 n, const CylFunction& f);

/// Equal as functions on R (compared at the lcm of the levels).
bool equal(const CylFunction& a, const CylFunction& b, const BigReal& tol);

/// A finitely supported function (r, ρ) ↦ f_r(ρ) on the groupoid, all f_r at one level.
class AlgebraElement {
public:
    using Terms = std::map<Rational, CylFunction>;

    AlgebraElement(i64 level, Mode mode, long precision = numtower::kDefaultPrecision);
    /// Raises every function to the level, zeroes ρ ≢ 0 mod q at r = p/q and drops zero terms.
    AlgebraElement(i64 level, Mode mode, Terms terms, long precision = numtower::kDefaultPrecision);

    i64 level() const { return level_; }
    Mode mode() const { return mode_; }
    long precision() const { return precision_; }
    const Terms& terms() const { return terms_; }
    /// f_r, or the zero function.
    CylFunction term(const Rational& r) const;

    AlgebraElement raise(i64 new_level) const;
    /// The smallest level ≥ base (a multiple of it dividing the current level) through which every term factors.
    AlgebraElement shrink(i64 base) const;
    /// Exact element mapped to C by ζ ↦ exp(2πiu/N).
    AlgebraElement to_numeric(i64 u, long precision) const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }
    friend AlgebraElement operator*(const Rational& c, const AlgebraElement& x);

    bool is_zero() const { return terms_.empty(); }

private:
    void normalize();

    i64 level_;
    Mode mode_;
    long precision_;
    Terms terms_;
};

/// f₁*f₂(r, ρ) = Σ_{sρ∈R} f₁(rs⁻¹, sρ) f₂(s, ρ).
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return convolve(x, y); }

/// f*(r, ρ) = conj f(r⁻¹, rρ).
AlgebraElement involution(const AlgebraElement& x);

/// t = re + i·im.
struct TimeParam {
    Rational re;
    Rational im;
    static TimeParam imaginary(const Rational& beta) { return {Rational(0), beta}; }
    static TimeParam real(const Rational& t) { return {t, Rational(0)}; }
    friend TimeParam operator+(const TimeParam& a, const TimeParam& b) { return {a.re + b.re, a.im + b.im}; }
};

/// σ_t multiplies f_r by r^{it}. Exact mode only admits t = iβ with integer β.
AlgebraElement time_evolve(const AlgebraElement& x, const TimeParam& t);

/// r^{it} as a complex number.
BigComplex ratio_power(const Rational& r, const TimeParam& t, long precision);

/// Default tolerance for numeric comparisons at the given precision.
BigReal comparison_tolerance(long precision);

bool equal(const AlgebraElement& x, const AlgebraElement& y);
/// Where x and y first differ, or nothing when they are equal.
std::optional<std::string> first_difference(const AlgebraElement& x, const AlgebraElement& y);

/// e(r): ratio 1, f_1(ρ) = exp(2πi ρ(r)). Throws LevelMismatch unless den(r) | N.
AlgebraElement gen_e(const QmodZ& r, i64 level, Mode mode = Mode::exact,
                     long precision = numtower::kDefaultPrecision);
/// μ_n: the indicator of ratio n. Throws LevelMismatch unless n | N.
AlgebraElement gen_mu(i64 n, i64 level, Mode mode = Mode::exact, long precision = numtower::kDefaultPrecision);
AlgebraElement identity(i64 level, Mode mode = Mode::exact, long precision = numtower::kDefaultPrecision);

void to_json(numtower::Json& j, const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const numtower::Json& j);

}  // namespace bcsys::bcalg
