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
#include <string>
#include <utility>

#include "bcsys/numtower/json.hpp"
#include "bcsys/numtower/rational.hpp"
#include "bcsys/numtower/residue.hpp"

namespace bcsys::qlat1d {

using numtower::i64;
using numtower::Rational;
using numtower::ResidueEndo;

/// The Q-lattice (λZ, λρ) with rational λ > 0 and ρ known at a finite level.
class QLattice1D {
public:
    QLattice1D(Rational scale, ResidueEndo rho);

    const Rational& scale() const { return scale_; }
    const ResidueEndo& rho() const { return rho_; }
    i64 level() const { return rho_.level(); }

    /// (cλZ, cλρ).
    QLattice1D scaled(const Rational& c) const { return {scale_ * c, rho_}; }
    /// The representative with λ = 1.
    QLattice1D normalized() const { return {Rational(1), rho_}; }

    std::string str() const;

private:
    Rational scale_;
    ResidueEndo rho_;
};

/// Same lattice and same labels, comparing ρ at the gcd of the two levels.
bool same_lattice(const QLattice1D& a, const QLattice1D& b);

struct Witness {
    i64 m;
    i64 n;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// The coprime (m, n) with mλ₁ = nλ₂, provided nρ₁ ≡ mρ₂ at the common level.
std::optional<Witness> commensurability_witness(const QLattice1D& a, const QLattice1D& b);

inline bool commensurable(const QLattice1D& a, const QLattice1D& b) {
    return commensurability_witness(a, b).has_value();
}

/// (r, ρ) with rρ ∈ R, decided at the level of ρ.
class GroupoidPoint {
public:
    /// Throws NotInGroupoid unless r = p/q has q | N and ρ ≡ 0 mod q.
    GroupoidPoint(Rational ratio, ResidueEndo rho);

    static bool is_member(const Rational& ratio, const ResidueEndo& rho);

    const Rational& ratio() const { return ratio_; }
    const ResidueEndo& rho() const { return rho_; }

    ResidueEndo source() const { return rho_; }
    /// rρ, known at level N/q.
    ResidueEndo target() const;

    friend bool operator==(const GroupoidPoint&, const GroupoidPoint&) = default;

    std::string str() const;

private:
    Rational ratio_;
    ResidueEndo rho_;
};

/// ((r⁻¹Z, ρ), (Z, ρ)) written in the (λZ, λρ) form.
std::pair<QLattice1D, QLattice1D> eta(const GroupoidPoint& p);

/// (r₁r₂, ρ₂) when r₂ρ₂ = ρ₁; otherwise NotComposable.
GroupoidPoint groupoid_compose(const GroupoidPoint& p1, const GroupoidPoint& p2);

void to_json(numtower::Json& j, const QLattice1D& l);
void to_json(numtower::Json& j, const GroupoidPoint& p);
QLattice1D lattice_from_json(const numtower::Json& j);
GroupoidPoint point_from_json(const numtower::Json& j);

}  // namespace bcsys::qlat1d
