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

#include "bcsys/numtower/qmodz.hpp"

#include "bcsys/numtower/rational.hpp"

namespace bcsys::numtower {

QmodZ::QmodZ(i64 num, i64 den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "QmodZ with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num = mod(num, den);
    const i64 g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

QmodZ QmodZ::parse(std::string_view text) {
    const Rational q = parse_rational(text);
    return {numerator_i64(q), denominator_i64(q)};
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    const i64 g = gcd(a.den_, b.den_);
    const i64 common = checked_mul(a.den_ / g, b.den_);
    const i64 n = checked_add(checked_mul(a.num_, common / a.den_), checked_mul(b.num_, common / b.den_));
    return {n, common};
}

QmodZ QmodZ::scaled(i64 k) const { return {mulmod(num_, k, den_), den_}; }

std::string QmodZ::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::vector<QmodZ> elements_of_level(i64 level) {
    std::vector<QmodZ> out;
    out.reserve(static_cast<std::size_t>(level));
    for (i64 k = 0; k < level; ++k) out.emplace_back(k, level);
    return out;
}

}  // namespace bcsys::numtower
