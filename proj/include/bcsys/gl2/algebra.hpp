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

#include <memory>
#include <optional>
#include <set>

#include "bcsys/bcalg/algebra.hpp"
#include "bcsys/bcalg/coefficient.hpp"
#include "bcsys/gl2/matrix.hpp"

namespace bcsys::gl2 {

using bcalg::Coefficient;
using bcalg::Mode;
using bcalg::TimeParam;

/// (g, ρ, z) with g ∈ GL₂⁺(Q), ρ ∈ M₂(Ẑ) at a finite level and z ∈ ℍ ∩ Q(i).
/// The point lies in the space when gρ ∈ M₂(Ẑ).
struct Gl2Point {
    Mat2Q g;
    Mat2Residue rho;
    GaussQ z;
};

bool in_space(const Gl2Point& p);

/// (γ₁gγ₂⁻¹, γ₂ρ, γ₂z) for γ₁, γ₂ ∈ SL₂(Z). InvalidArgument if either determinant is not 1.
Gl2Point gamma_action(const IntMat2& gamma1, const IntMat2& gamma2, const Gl2Point& p);

/// A Γ×Γ-invariant function on the space, with finite support modulo Γ on both sides.
///
/// The generators are the functions
///     f(g, ρ, z) = c · [gρ ∈ M₂(Ẑ)] · avg_{σ ∈ Stab(z₀)} [Γgδσ = Γh] · ζ_N^{tr(K (δσ)⁻¹ρ)}
/// where z = δz₀ with z₀ in the fundamental domain: locally constant in z on the tiles δF,
/// supported on the double coset ΓhΓ, with a level-N character in ρ. Everything else is built
/// lazily from them and evaluated pointwise.
class Gl2Element {
public:
    /// h is any representative of the left coset Γh; K is read mod N. Throws
    /// DeterminantBoundExceeded if the height of det h exceeds det_bound.
    static Gl2Element basic(i64 level, const Mat2Q& h, const IntMat2& character, Coefficient c, i64 det_bound);
    /// The unit: 1 on Γ, 0 elsewhere.
    static Gl2Element identity(Mode mode = Mode::exact, long precision = numtower::kDefaultPrecision);

    i64 level() const;
    Mode mode() const;
    long precision() const;
    /// Every support determinant has height at most this.
    i64 det_bound() const;
    /// Double cosets outside which the element vanishes (a superset for composite elements).
    const std::set<DoubleCoset>& support() const;

    /// Exact in Q(ζ) in exact mode. LevelMismatch if ρ is known at too low a level.
    Coefficient evaluate(const Gl2Point& p) const;

    friend Gl2Element operator+(const Gl2Element& x, const Gl2Element& y);
    friend Gl2Element operator*(const Rational& c, const Gl2Element& x);
    friend Gl2Element operator-(const Gl2Element& x, const Gl2Element& y) { return x + Rational(-1) * y; }

    friend Gl2Element gl2_convolve(const Gl2Element& x, const Gl2Element& y, std::optional<i64> cap);
    friend Gl2Element gl2_involution(const Gl2Element& x);
    friend Gl2Element gl2_time_evolve(const Gl2Element& x, const TimeParam& t);
    friend void to_json(numtower::Json& j, const Gl2Element& x);

    struct Node;

private:
    explicit Gl2Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Σ_{s ∈ Γ\GL₂⁺(Q), sρ ∈ M₂(Ẑ)} x(gs⁻¹, sρ, s(z)) y(s, ρ, z). The determinant bound of the
/// result is the product; DeterminantBoundExceeded if it passes the cap.
Gl2Element gl2_convolve(const Gl2Element& x, const Gl2Element& y, std::optional<i64> cap = std::nullopt);
inline Gl2Element operator*(const Gl2Element& x, const Gl2Element& y) { return gl2_convolve(x, y); }
/// conj x(g⁻¹, gρ, g(z)).
Gl2Element gl2_involution(const Gl2Element& x);
/// det(g)^{it} x(g, ρ, z). Exact mode needs t = iβ with integer β.
Gl2Element gl2_time_evolve(const Gl2Element& x, const TimeParam& t);

void to_json(numtower::Json& j, const Gl2Element& x);

}  // namespace bcsys::gl2
