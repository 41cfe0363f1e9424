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

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bcsys/numtower/arith.hpp"
#include "bcsys/numtower/json.hpp"
#include "bcsys/numtower/rational.hpp"

namespace bcsys::gl2 {

using numtower::i64;
using numtower::Rational;

/// (a b; c d) with 64-bit integer entries. Products are overflow-checked.
struct IntMat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    i64 det() const;
    i64 content() const;
    /// The adjugate, which is the inverse when det = ±1.
    IntMat2 adjugate() const { return {d, -b, -c, a}; }
    IntMat2 operator-() const { return {-a, -b, -c, -d}; }
    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
    friend bool operator==(const IntMat2&, const IntMat2&) = default;
    friend auto operator<=>(const IntMat2&, const IntMat2&) = default;
    std::string str() const;
};

/// An element of GL₂⁺(Q).
class Mat2Q {
public:
    Mat2Q() : e_{Rational(1), Rational(0), Rational(0), Rational(1)} {}
    /// Throws InvalidArgument unless the determinant is positive.
    Mat2Q(Rational a, Rational b, Rational c, Rational d);
    Mat2Q(const IntMat2& m);
    static Mat2Q scalar(const Rational& c) { return {c, Rational(0), Rational(0), c}; }
    static Mat2Q diag(const Rational& x, const Rational& y) { return {x, Rational(0), Rational(0), y}; }

    const Rational& a() const { return e_[0]; }
    const Rational& b() const { return e_[1]; }
    const Rational& c() const { return e_[2]; }
    const Rational& d() const { return e_[3]; }
    Rational det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    Mat2Q inverse() const;
    bool is_integral() const;

    /// A/e with A integral and e > 0 minimal; then gcd(content(A), e) = 1.
    struct Integral {
        IntMat2 matrix;
        i64 denominator;
    };
    Integral integral() const;

    friend Mat2Q operator*(const Mat2Q& x, const Mat2Q& y);
    friend bool operator==(const Mat2Q&, const Mat2Q&) = default;
    friend std::strong_ordering operator<=>(const Mat2Q& x, const Mat2Q& y);
    std::string str() const;

private:
    std::array<Rational, 4> e_;
};

/// The representative (a b; 0 d) of Γg with a, d > 0 and 0 ≤ b < d, Γ = SL₂(Z).
Mat2Q hermite_form(const Mat2Q& g);
/// Same, also returning γ with γg = hermite_form(g).
Mat2Q hermite_form(const Mat2Q& g, IntMat2& gamma);

/// ΓgΓ, keyed by its Smith form scale·diag(1, m) with scale > 0 rational and m ≥ 1.
struct DoubleCoset {
    Rational scale;
    i64 m;
    Rational det() const { return scale * scale * m; }
    friend bool operator==(const DoubleCoset&, const DoubleCoset&) = default;
    friend std::strong_ordering operator<=>(const DoubleCoset& x, const DoubleCoset& y);
    std::string str() const;
};

DoubleCoset double_coset(const Mat2Q& g);

/// Γ\{integer matrices of determinant n}: (a b; 0 d), ad = n, 0 ≤ b < d. There are σ₁(n).
std::vector<Mat2Q> hecke_cosets(i64 n);
/// Γ\ΓgΓ for the given double coset: scale·(a b; 0 d) with gcd(a, b, d) = 1.
const std::vector<Mat2Q>& left_cosets(const DoubleCoset& dc);

/// max(|p|, q) for p/q in lowest terms.
i64 height(const Rational& q);

/// ρ ∈ M₂(Ẑ) known mod its level N.
class Mat2Residue {
public:
    Mat2Residue(i64 level, IntMat2 entries);
    static Mat2Residue zero(i64 level) { return {level, IntMat2{0, 0, 0, 0}}; }

    i64 level() const { return level_; }
    const IntMat2& entries() const { return m_; }

    /// γρ for an integer matrix.
    Mat2Residue left(const IntMat2& gamma) const;
    /// Whether gρ ∈ M₂(Ẑ). With g = A/e this is Aρ ≡ 0 mod e, decidable when e | N; otherwise LevelMismatch.
    bool admits(const Mat2Q& g) const;
    /// gρ at level N/e, or nullopt when it is not integral.
    std::optional<Mat2Residue> act(const Mat2Q& g) const;
    /// Projection to a divisor of the level.
    Mat2Residue lower(i64 level) const;
    /// tr(Kρ) mod n, for n | N.
    i64 trace_pairing(const IntMat2& k, i64 n) const;

    friend bool operator==(const Mat2Residue&, const Mat2Residue&) = default;
    std::string str() const;

private:
    i64 level_;
    IntMat2 m_;
};

/// x + iy with rational x and y > 0.
struct GaussQ {
    Rational x;
    Rational y;
    friend bool operator==(const GaussQ&, const GaussQ&) = default;
    std::string str() const;
};

/// (az + b)/(cz + d), exact.
GaussQ mobius(const Mat2Q& g, const GaussQ& z);

/// z = δ·z0 with z0 in the closed standard fundamental domain, boundary identified:
/// −1/2 ≤ Re z0 < 1/2, and |z0| > 1 or (|z0| = 1 and Re z0 ≤ 0).
struct FundamentalReduction {
    GaussQ z0;
    IntMat2 delta;
};
FundamentalReduction reduce_to_fundamental_domain(const GaussQ& z);
/// Stab_Γ(z0) for a reduced point: {±1}, or {±1, ±S} at z0 = i.
std::vector<IntMat2> stabilizer(const GaussQ& z0);

void to_json(numtower::Json& j, const IntMat2& m);
void to_json(numtower::Json& j, const Mat2Q& g);
void to_json(numtower::Json& j, const Mat2Residue& r);
IntMat2 int_mat2_from_json(const numtower::Json& j);
Mat2Q mat2q_from_json(const numtower::Json& j);

}  // namespace bcsys::gl2
