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

#include <vector>

#include "bcsys/bcalg/algebra.hpp"
#include "bcsys/qlat1d/qlattice.hpp"
#include "bcsys/rng.hpp"

namespace bcsys::gen {

using numtower::i64;
using numtower::Rational;
using numtower::ResidueEndo;
using qlat1d::GroupoidPoint;
using qlat1d::QLattice1D;

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(xs.size()) - 1))];
}

inline i64 random_coprime(Rng& rng, i64 lo, i64 hi, i64 to) {
    for (;;) {
        const i64 p = rng.uniform(lo, hi);
        if (numtower::gcd(p, to) == 1) return p;
    }
}

inline QLattice1D random_lattice(Rng& rng, i64 level) {
    return {numtower::make_rational(rng.uniform(1, 12), rng.uniform(1, 12)), ResidueEndo(level, rng.uniform(0, level - 1))};
}

/// A ratio r = p/q with (r, ρ) in the groupoid.
inline Rational random_admissible_ratio(Rng& rng, const ResidueEndo& rho) {
    const i64 g = numtower::gcd(rho.residue(), rho.level());
    const i64 q = pick(rng, numtower::divisors(g == 0 ? rho.level() : g));
    return numtower::make_rational(random_coprime(rng, 1, 12, q), q);
}

inline GroupoidPoint random_point(Rng& rng, const ResidueEndo& rho) { return {random_admissible_ratio(rng, rho), rho}; }

/// A lattice commensurable with L, obtained by one groupoid move: (λ/r, rρ).
inline QLattice1D groupoid_move(Rng& rng, const QLattice1D& l) {
    const GroupoidPoint p = random_point(rng, l.rho());
    return qlat1d::eta(p).first.scaled(l.scale());
}

struct ComposableTriple {
    GroupoidPoint p1, p2, p3;
};

/// p1 ∘ p2 ∘ p3 at the given level, projected from consistent data at a higher level:
/// ρ₃ = Qt at level N·Q with Q = q₁q₂q₃ | N, ρ₂ = r₃ρ₃, ρ₁ = r₂ρ₂.
inline ComposableTriple random_composable_triple(Rng& rng, i64 level) {
    const i64 q3 = pick(rng, numtower::divisors(level));
    const i64 q2 = pick(rng, numtower::divisors(level / q3));
    const i64 q1 = pick(rng, numtower::divisors(level / (q3 * q2)));
    const i64 p1 = random_coprime(rng, 1, 12, q1), p2 = random_coprime(rng, 1, 12, q2), p3 = random_coprime(rng, 1, 12, q3);
    const i64 t = rng.uniform(0, level - 1);
    const i64 rho3 = q1 * q2 * q3 * t;
    const i64 rho2 = rho3 / q3 * p3;
    const i64 rho1 = rho2 / q2 * p2;
    return {GroupoidPoint(numtower::make_rational(p1, q1), ResidueEndo(level, rho1)),
            GroupoidPoint(numtower::make_rational(p2, q2), ResidueEndo(level, rho2)),
            GroupoidPoint(numtower::make_rational(p3, q3), ResidueEndo(level, rho3))};
}

inline numtower::Cyclotomic random_cyclotomic(Rng& rng, i64 conductor, int max_terms = 3) {
    numtower::Cyclotomic::Terms t;
    const int n = static_cast<int>(rng.uniform(0, max_terms));
    for (int i = 0; i < n; ++i)
        t[rng.uniform(0, conductor - 1)] += numtower::make_rational(rng.uniform(-4, 4), rng.uniform(1, 3));
    return {conductor, std::move(t)};
}

/// A nonzero exact element at the given level with up to `max_terms` ratios p/q, q | level, p ≤ 6.
inline bcalg::AlgebraElement random_element(Rng& rng, i64 level, int max_terms = 4) {
    const auto qs = numtower::divisors(level);
    for (;;) {
        bcalg::AlgebraElement::Terms terms;
        const int n = static_cast<int>(rng.uniform(1, max_terms));
        for (int i = 0; i < n; ++i) {
            const i64 q = pick(rng, qs);
            const Rational r = numtower::make_rational(random_coprime(rng, 1, 6, q), q);
            std::vector<bcalg::Coefficient> values;
            for (i64 k = 0; k < level; ++k)
                values.emplace_back(rng.uniform(0, 2) == 0 ? numtower::Cyclotomic() : random_cyclotomic(rng, level));
            terms.insert_or_assign(r, bcalg::CylFunction(level, std::move(values)));
        }
        bcalg::AlgebraElement x(level, bcalg::Mode::exact, std::move(terms));
        if (!x.is_zero()) return x;
    }
}

}  // namespace bcsys::gen
