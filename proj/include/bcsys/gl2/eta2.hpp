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

#include <utility>

#include "bcsys/gl2/matrix.hpp"

namespace bcsys::gl2 {

/// The 2-d Q-lattice (BZ², φ) whose labelling φ: Q²/Z² → QΛ/Λ is x ↦ B·R·x,
/// with R ∈ M₂(Ẑ) known at a finite level. B is a positively oriented basis.
struct Lattice2 {
    Mat2Q basis;
    Mat2Residue labels;
    friend bool operator==(const Lattice2&, const Lattice2&) = default;
};

/// The basis changed by γ ∈ SL₂(Z) to the form (p 0; q r) with p, r > 0 and 0 ≤ q < r,
/// and the labels rewritten as γ⁻¹R in the new basis.
Lattice2 canonical(const Lattice2& l);

/// Same rational span and φ₁ = φ₂ modulo Λ₁ + Λ₂. For labels in M₂(Ẑ) this forces ρ₁ = Cρ₂ with
/// C the change of basis; it is tested at the gcd of the two levels.
bool commensurable(const Lattice2& x, const Lattice2& y);

/// ((α⁻¹g⁻¹Λ₀, α⁻¹ρ), (α⁻¹Λ₀, α⁻¹ρ)) in canonical form. The first label is carried in the
/// basis α⁻¹g⁻¹ as the coordinates gρ. NotInSpace unless gρ ∈ M₂(Ẑ).
std::pair<Lattice2, Lattice2> eta2(const Mat2Q& g, const Mat2Residue& rho, const Mat2Q& alpha);
/// With α = (y x; 0 1), which sends i to z = x + iy.
std::pair<Lattice2, Lattice2> eta2(const Mat2Q& g, const Mat2Residue& rho, const GaussQ& z);

}  // namespace bcsys::gl2
