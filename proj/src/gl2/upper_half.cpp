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

#include "bcsys/gl2/upper_half.hpp"

#include "bcsys/error.hpp"

namespace bcsys::gl2 {

UpperHalfPoint::UpperHalfPoint(BigComplex z) : z_(std::move(z)) {
    if (z_.im().sign() <= 0) throw Error(ErrorKind::DomainError, "point " + z_.str(10) + " is not in the upper half plane");
}

RealMat2 cstar_embed(const BigReal& a, const BigReal& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DegenerateInput, "0 is not in C^*");
    return {a, b, -b, a};
}

UpperHalfPoint quotient_to_h(const RealMat2& alpha) {
    if (alpha.det().sign() <= 0) throw Error(ErrorKind::DegenerateInput, "matrix does not have positive determinant");
    const BigComplex num(alpha.b, alpha.a), den(alpha.d, alpha.c);
    return UpperHalfPoint(num / den);
}

UpperHalfPoint mobius(const Mat2Q& g, const UpperHalfPoint& z) {
    const long p = z.z().precision();
    const auto r = [p](const Rational& q) { return BigComplex(BigReal(q, p)); };
    return UpperHalfPoint((r(g.a()) * z.z() + r(g.b())) / (r(g.c()) * z.z() + r(g.d())));
}

}  // namespace bcsys::gl2
