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
#include <vector>

#include "bcsys/kms/bc.hpp"
#include "bcsys/numtower/cyclotomic.hpp"
#include "bcsys/numtower/json.hpp"
#include "bcsys/numtower/qmodz.hpp"

namespace bcsys::galois {

using numtower::Cyclotomic;
using numtower::i64;
using numtower::QmodZ;

/// ζ_b ↦ ζ_b^u in Gal(Q(ζ_b)/Q) ≅ (Z/b)^*.
class GaloisElement {
public:
    /// Throws NonInvertible unless gcd(u, b) = 1.
    GaloisElement(i64 conductor, i64 exponent);

    i64 conductor() const { return b_; }
    i64 exponent() const { return u_; }

    /// Elements of different conductors act on the lcm after lifting.
    Cyclotomic apply(const Cyclotomic& x) const;
    friend GaloisElement operator*(const GaloisElement& g, const GaloisElement& h);
    GaloisElement inverse() const;

    friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

private:
    i64 b_;
    i64 u_;
};

inline Cyclotomic galois_apply(const GaloisElement& g, const Cyclotomic& x) { return g.apply(x); }

/// The symmetry side: u ∈ (Z/b)^*, the level-b image of Ẑ^*, acting on Q/Z by e(r) ↦ e(ur).
class Symmetry {
public:
    Symmetry(i64 level, i64 unit);
    i64 level() const { return level_; }
    i64 unit() const { return unit_; }
    /// Throws LevelMismatch unless den(r) | level.
    QmodZ apply(const QmodZ& r) const;

private:
    i64 level_;
    i64 unit_;
};

/// θ at level b: the identity on exponents, kept as a separate map between separate types.
Symmetry theta(const GaloisElement& g);

inline QmodZ theta_on_generator(const GaloisElement& g, const QmodZ& r) { return theta(g).apply(r); }

struct IntertwiningRow {
    i64 b;
    kms::Beta beta;
    i64 u;
    i64 iota;
    i64 a;
    kms::StateValue lhs;
    kms::StateValue rhs;
    bool pass;
    numtower::BigReal bound;
};

/// γ_u(φ(e(a/b))) against φ(e(ua/b)) for a = 0 and every a ∈ (Z/b)^*, with φ the extremal
/// state for ι. Exact at β = ∞; at finite β > 1 γ_u acts on the roots of unity and leaves the
/// real weights of the state alone, and the comparison uses the combined bounds.
std::vector<IntertwiningRow> intertwining_check(i64 b, const kms::Beta& beta, i64 u, i64 iota,
                                                const kms::TruncationPolicy& policy = {},
                                                long precision = numtower::kDefaultPrecision);

void to_json(numtower::Json& j, const IntertwiningRow& row);

}  // namespace bcsys::galois
