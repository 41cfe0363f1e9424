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

#include "bcsys/galois/galois.hpp"

#include "bcsys/error.hpp"

namespace bcsys::galois {

using numtower::BigComplex;
using numtower::BigReal;
using numtower::gcd;
using numtower::mod;
using numtower::mulmod;

namespace {

void require_unit(i64 u, i64 b) {
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    if (gcd(mod(u, b), b) != 1)
        throw Error(ErrorKind::NonInvertible, std::to_string(u) + " is not a unit mod " + std::to_string(b));
}

// γ_u applied to Σ_k w_k ζ_b^{ak}: the weights stay, the roots move.
kms::StateValue galois_of_low_temp(const GaloisElement& g, const QmodZ& r, const kms::Beta& beta, i64 iota,
                                   long precision) {
    const i64 b = r.den();
    if (numtower::gcd(mod(iota, b), b) != 1)
        throw Error(ErrorKind::NonInvertible, "iota exponent is not a unit mod " + std::to_string(b));
    const auto weights = kms::low_temp_weights(b, beta, precision);
    BigComplex v(precision);
    BigReal bound(precision);
    for (i64 k = 1; k <= b; ++k) {
        const auto& w = weights[static_cast<std::size_t>(k - 1)];
        const Cyclotomic root = kms::ground_state(r.scaled(k), iota);
        v += g.apply(root).embed(precision) * w.value.re();
        bound += w.bound;
    }
    return {v, bound, beta, "hurwitz"};
}

}  // namespace

GaloisElement::GaloisElement(i64 conductor, i64 exponent) : b_(conductor), u_(0) {
    require_unit(exponent, conductor);
    u_ = mod(exponent, conductor);
    if (b_ == 1) u_ = 1;
}

Cyclotomic GaloisElement::apply(const Cyclotomic& x) const {
    const i64 level = numtower::lcm(b_, x.conductor());
    const i64 lifted = numtower::lift_unit(u_, b_, level);
    return x.raise(level).galois(lifted).canonical();
}

GaloisElement operator*(const GaloisElement& g, const GaloisElement& h) {
    if (g.b_ != h.b_) throw Error(ErrorKind::LevelMismatch, "Galois elements of different conductors");
    return {g.b_, mulmod(g.u_, h.u_, g.b_)};
}

GaloisElement GaloisElement::inverse() const { return {b_, *numtower::inverse_mod(u_, b_)}; }

Symmetry::Symmetry(i64 level, i64 unit) : level_(level), unit_(mod(unit, level)) { require_unit(unit, level); }

QmodZ Symmetry::apply(const QmodZ& r) const {
    if (level_ % r.den() != 0)
        throw Error(ErrorKind::LevelMismatch, r.str() + " is not of level " + std::to_string(level_));
    return r.scaled(unit_);
}

Symmetry theta(const GaloisElement& g) { return {g.conductor(), g.exponent()}; }

std::vector<IntertwiningRow> intertwining_check(i64 b, const kms::Beta& beta, i64 u, i64 iota,
                                                const kms::TruncationPolicy& policy, long precision) {
    const GaloisElement g(b, u);
    require_unit(iota, b);
    std::vector<IntertwiningRow> rows;
    for (i64 a = 0; a < b; ++a) {
        if (a != 0 && gcd(a, b) != 1) continue;
        const QmodZ r(a, b);
        const QmodZ moved = theta_on_generator(g, r);
        const BigReal zero(precision);
        if (beta.is_infinite()) {
            const Cyclotomic lhs = g.apply(kms::ground_state(r, iota));
            const Cyclotomic rhs = kms::ground_state(moved, iota).canonical();
            rows.push_back({b, beta, u, iota, a, {lhs, zero, beta, "exact"}, {rhs, zero, beta, "exact"}, lhs == rhs, zero});
            continue;
        }
        // e(0) = 1 is rational, so γ fixes it and both sides are exact.
        kms::StateValue lhs = r.is_zero() ? kms::low_temp_state(r, beta, iota, policy, precision)
                                          : galois_of_low_temp(g, r, beta, iota, precision);
        kms::StateValue rhs = kms::low_temp_state(moved, beta, iota, policy, precision);
        const BigReal bound = lhs.error_bound + rhs.error_bound;
        const bool pass = (lhs.numeric(precision) - rhs.numeric(precision)).abs() <= bound;
        IntertwiningRow row{b, beta, u, iota, a, std::move(lhs), std::move(rhs), pass, bound};
        rows.push_back(std::move(row));
    }
    return rows;
}

void to_json(numtower::Json& j, const IntertwiningRow& row) {
    const auto side = [](const kms::StateValue& v) {
        numtower::Json s;
        if (const auto* c = std::get_if<Cyclotomic>(&v.value))
            s = c->canonical().str();
        else
            s = std::get<BigComplex>(v.value);
        return s;
    };
    j = numtower::Json{{"b", row.b},       {"beta", row.beta}, {"u", row.u},         {"iota", row.iota},
                       {"a", row.a},       {"lhs", side(row.lhs)}, {"rhs", side(row.rhs)}, {"pass", row.pass},
                       {"bound", row.bound}};
}

}  // namespace bcsys::galois
