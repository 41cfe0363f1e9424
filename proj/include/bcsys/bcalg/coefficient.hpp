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

#include <string>
#include <variant>

#include "bcsys/numtower/bigfloat.hpp"
#include "bcsys/numtower/cyclotomic.hpp"
#include "bcsys/numtower/json.hpp"

namespace bcsys::bcalg {

using numtower::BigComplex;
using numtower::BigReal;
using numtower::Cyclotomic;
using numtower::i64;
using numtower::Rational;

enum class Mode { exact, numeric };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// A function value: exact in Q(ζ_N) or an arbitrary-precision complex number.
/// Mixing the two in one operation throws ModeMismatch.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(Cyclotomic c) : v_(std::move(c)) {}
    Coefficient(BigComplex z) : v_(std::move(z)) {}

    static Coefficient zero(Mode mode, long precision);
    static Coefficient one(Mode mode, long precision);
    /// exp(2πi k/N) in the given mode.
    static Coefficient root(Mode mode, i64 conductor, i64 k, long precision);

    Mode mode() const { return std::holds_alternative<Cyclotomic>(v_) ? Mode::exact : Mode::numeric; }
    const Cyclotomic& exact() const;
    const BigComplex& numeric() const;

    /// Structural zero test; exact values are reduced first.
    bool is_zero() const;
    /// Zero without reduction: no terms, or a numeric 0.
    bool is_trivially_zero() const;
    Coefficient conj() const;
    Coefficient embedded(i64 u, long precision) const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Rational& c);
    Coefficient& operator*=(const BigComplex& z);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(Coefficient a, const Rational& c) { return a *= c; }

    /// Exact equality, or |a − b| ≤ tol in numeric mode.
    friend bool close(const Coefficient& a, const Coefficient& b, const BigReal& tol);

    std::string str() const;

private:
    std::variant<Cyclotomic, BigComplex> v_;
};

void to_json(numtower::Json& j, const Coefficient& c);
Coefficient coefficient_from_json(const numtower::Json& j);

}  // namespace bcsys::bcalg
