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

#include "bcsys/bcalg/duality.hpp"

namespace bcsys::bcalg {

GroupAlgebraElement::GroupAlgebraElement(i64 level, Terms terms) : level_(level) {
    if (level <= 0) throw Error(ErrorKind::InvalidArgument, "level must be positive");
    for (auto& [r, c] : terms) {
        if (level % r.den() != 0)
            throw Error(ErrorKind::LevelMismatch, "i(" + r.str() + ") needs a level divisible by " + std::to_string(r.den()));
        if (c != 0) terms_.emplace(r, c);
    }
}

GroupAlgebraElement GroupAlgebraElement::basis(const QmodZ& r, i64 level) {
    return {level == 0 ? r.den() : level, Terms{{r, Rational(1)}}};
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement::Terms t = a.terms_;
    for (const auto& [r, c] : b.terms_) t[r] += c;
    for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
    return {numtower::lcm(a.level_, b.level_), std::move(t)};
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement::Terms t;
    for (const auto& [r, c] : a.terms_)
        for (const auto& [s, d] : b.terms_) t[r + s] += c * d;
    for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
    return {numtower::lcm(a.level_, b.level_), std::move(t)};
}

std::string GroupAlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [r, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += numtower::to_string(c) + "*i(" + r.str() + ")";
    }
    return out;
}

GroupAlgebraElement beta_action(i64 n, const GroupAlgebraElement& x) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "beta_action needs n ≥ 1");
    GroupAlgebraElement::Terms t;
    const Rational w = numtower::make_rational(1, n);
    for (const auto& [r, c] : x.terms())
        for (i64 j = 1; j <= n; ++j) t[QmodZ(r.num() + j * r.den(), n * r.den())] += c * w;
    return {numtower::checked_mul(n, x.level()), std::move(t)};
}

CylFunction gelfand(const GroupAlgebraElement& x) {
    const i64 level = x.level();
    std::vector<Coefficient> values;
    values.reserve(static_cast<std::size_t>(level));
    for (i64 k = 0; k < level; ++k) {
        Cyclotomic v;
        const numtower::ResidueEndo rho(level, k);
        for (const auto& [r, c] : x.terms()) v += Cyclotomic::from_qmodz(rho.apply(r)) * c;
        values.emplace_back(std::move(v));
    }
    return {level, std::move(values)};
}

bool gelfand_square_check(i64 n, i64 b) {
    const BigReal tol = comparison_tolerance(numtower::kDefaultPrecision);
    for (i64 a = 0; a < b; ++a) {
        const GroupAlgebraElement x = GroupAlgebraElement::basis(QmodZ(a, b), b);
        const CylFunction lhs = gelfand(beta_action(n, x));
        const CylFunction rhs = alpha_action(n, gelfand(x));
        if (lhs.level() != n * b || rhs.level() != n * b || !equal(lhs, rhs, tol)) return false;
    }
    return true;
}

}  // namespace bcsys::bcalg
