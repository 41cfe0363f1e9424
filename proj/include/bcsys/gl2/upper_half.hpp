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

#include "bcsys/gl2/matrix.hpp"
#include "bcsys/numtower/bigfloat.hpp"

namespace bcsys::gl2 {

using numtower::BigComplex;
using numtower::BigReal;

/// A real 2×2 matrix.
struct RealMat2 {
    BigReal a, b, c, d;
    BigReal det() const { return a * d - b * c; }
};

/// A point of ℍ; construction fails with DomainError unless Im z > 0.
class UpperHalfPoint {
public:
    explicit UpperHalfPoint(BigComplex z);
    const BigComplex& z() const { return z_; }

private:
    BigComplex z_;
};

/// a + ib ↦ (a b; −b a). DegenerateInput at 0.
RealMat2 cstar_embed(const BigReal& a, const BigReal& b);
/// (a b; c d) ↦ (ai + b)/(ci + d). DegenerateInput unless det > 0.
UpperHalfPoint quotient_to_h(const RealMat2& alpha);
/// Linear fractional action of GL₂⁺(Q) on ℍ.
UpperHalfPoint mobius(const Mat2Q& g, const UpperHalfPoint& z);

}  // namespace bcsys::gl2
