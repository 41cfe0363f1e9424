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

#include <optional>
#include <vector>

#include "bcsys/gl2/algebra.hpp"
#include "bcsys/rng.hpp"

namespace bcsys::gl2 {

/// A word of a few T^k and S factors.
IntMat2 random_sl2(Rng& rng, int steps = 4);

/// x + iy with x ∈ [−5, 5], y ∈ (0, 6] on small denominators.
GaussQ random_gauss(Rng& rng);

/// A uniform residue matrix at the given level.
Mat2Residue random_residue(Rng& rng, i64 level);

/// An element with its basic summands and their coset representatives, so that sample points
/// can be steered onto the support and oracles can re-expand it.
struct ElementSample {
    Gl2Element element;
    std::vector<Gl2Element> basics;
    std::vector<Mat2Q> heads;
};

/// One basic term on a random double coset of determinant height ≤ bound, random character
/// and coefficient at the given level.
ElementSample random_basic(Rng& rng, i64 level, i64 bound);

/// Up to three basic terms.
ElementSample random_element(Rng& rng, i64 level, i64 bound);

/// A level for ρ fine enough that every sρ met in nested sums of such samples is decidable.
inline i64 sampling_level(i64 level) { return level * 60 * 60 * 60; }

/// Mostly points where f₁ * … * f_k has a chance to be nonzero: z₀ in the fundamental domain and
/// g = h₁δ₁⁻¹h₂δ₂⁻¹⋯h_k with δ_j reducing h_{j+1}⋯h_k z₀; a quarter are unsteered. The result is
/// moved by a random pair in Γ×Γ.
Gl2Point random_point(Rng& rng, const std::vector<const ElementSample*>& factors, i64 rho_level);

/// (g⁻¹, gρ, gz), where an involuted element sees the original point; nullopt off the space.
std::optional<Gl2Point> flipped(const Gl2Point& p);

}  // namespace bcsys::gl2
