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

#include <map>
#include <string>

#include "bcsys/bcalg/algebra.hpp"

namespace bcsys::bcalg {

/// An element Σ c_r i(r) of Q[Q/Z] with every den(r) dividing the level.
class GroupAlgebraElement {
public:
    using Terms = std::map<QmodZ, Rational>;

    explicit GroupAlgebraElement(i64 level) : level_(level) {}
    GroupAlgebraElement(i64 level, Terms terms);
    /// i(r) at level den(r), or at a multiple of it.
    static GroupAlgebraElement basis(const QmodZ& r, i64 level = 0);

    i64 level() const { return level_; }
    const Terms& terms() const { return terms_; }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    i64 level_;
    Terms terms_;
};

/// β_n(i(r)) = (1/n)Σ_{j=1}^{n} i((r+j)/n); the result lives at level n·b.
GroupAlgebraElement beta_action(i64 n, const GroupAlgebraElement& x);

/// Γ(i(r))(ρ) = exp(2πi ρ(r)), exact, at the level of x.
CylFunction gelfand(const GroupAlgebraElement& x);

/// Γ∘β_n = α_n∘Γ on every i(r) with den(r) | b, compared exactly at level n·b.
bool gelfand_square_check(i64 n, i64 b);

}  // namespace bcsys::bcalg
