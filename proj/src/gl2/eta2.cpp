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

#include "bcsys/gl2/eta2.hpp"

#include "bcsys/error.hpp"

namespace bcsys::gl2 {

namespace {

Mat2Q transpose(const Mat2Q& m) { return {m.a(), m.c(), m.b(), m.d()}; }

IntMat2 transpose(const IntMat2& m) { return {m.a, m.c, m.b, m.d}; }

}  // namespace

Lattice2 canonical(const Lattice2& l) {
    // Row Hermite form of Bᵀ under SL₂(Z): U·Bᵀ = H, so B·Uᵀ = Hᵀ and the coordinates become (Uᵀ)⁻¹R.
    IntMat2 u;
    const Mat2Q h = hermite_form(transpose(l.basis), u);
    const IntMat2 gamma = transpose(u);
    return {transpose(h), l.labels.left(gamma.adjugate())};
}

bool commensurable(const Lattice2& x, const Lattice2& y) {
    // B_x ρ_x and B_y ρ_y must agree as maps Q²/Z² → Q², i.e. ρ_x = Cρ_y with C = B_x⁻¹B_y.
    // Both sides are known modulo their levels, so the comparison happens at the gcd.
    const Mat2Q c = x.basis.inverse() * y.basis;
    const auto moved = y.labels.act(c);
    if (!moved) return false;
    const i64 common = numtower::gcd(x.labels.level(), moved->level());
    return x.labels.lower(common) == moved->lower(common);
}

std::pair<Lattice2, Lattice2> eta2(const Mat2Q& g, const Mat2Residue& rho, const Mat2Q& alpha) {
    const auto grho = rho.act(g);
    if (!grho) throw Error(ErrorKind::NotInSpace, "g rho is not integral for g = " + g.str() + ", rho = " + rho.str());
    const Mat2Q alpha_inv = alpha.inverse();
    Lattice2 first = canonical({alpha_inv * g.inverse(), *grho});
    Lattice2 second = canonical({alpha_inv, rho});
    if (!commensurable(first, second)) throw Error(ErrorKind::Inconsistent, "eta2 produced non-commensurable lattices");
    return {std::move(first), std::move(second)};
}

std::pair<Lattice2, Lattice2> eta2(const Mat2Q& g, const Mat2Residue& rho, const GaussQ& z) {
    return eta2(g, rho, Mat2Q(z.y, z.x, Rational(0), Rational(1)));
}

}  // namespace bcsys::gl2
