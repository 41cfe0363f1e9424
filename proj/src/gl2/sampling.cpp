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

#include "bcsys/gl2/sampling.hpp"

namespace bcsys::gl2 {

using numtower::Cyclotomic;
using numtower::make_rational;

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(xs.size()) - 1))];
}

}  // namespace

IntMat2 random_sl2(Rng& rng, int steps) {
    IntMat2 g;
    const IntMat2 s{0, -1, 1, 0};
    for (int i = 0; i < steps; ++i) {
        g = g * IntMat2{1, rng.uniform(-2, 2), 0, 1};
        if (rng.coin()) g = g * s;
    }
    return g;
}

GaussQ random_gauss(Rng& rng) {
    return {make_rational(rng.uniform(-40, 40), 8), make_rational(rng.uniform(1, 24), rng.uniform(4, 16))};
}

Mat2Residue random_residue(Rng& rng, i64 level) {
    return {level, {rng.uniform(0, level - 1), rng.uniform(0, level - 1), rng.uniform(0, level - 1), rng.uniform(0, level - 1)}};
}

ElementSample random_basic(Rng& rng, i64 level, i64 bound) {
    static const std::vector<DoubleCoset> shapes = {
        {Rational(1), 1}, {Rational(1), 2}, {Rational(1), 3}, {Rational(1), 6}, {Rational(2), 1},
        {make_rational(1, 2), 2}, {Rational(1), 4}, {make_rational(1, 2), 1}, {Rational(1), 5}};
    std::vector<DoubleCoset> allowed;
    for (const auto& dc : shapes)
        if (height(dc.det()) <= bound) allowed.push_back(dc);
    const Mat2Q h = Mat2Q(random_sl2(rng, 2)) * pick(rng, left_cosets(pick(rng, allowed)));
    const IntMat2 k{rng.uniform(0, level - 1), rng.uniform(0, level - 1), rng.uniform(0, level - 1), rng.uniform(0, level - 1)};
    const Cyclotomic c = Cyclotomic::root(level, rng.uniform(0, level - 1)) * Rational(rng.uniform(1, 3));
    const Gl2Element f = Gl2Element::basic(level, h, k, c, bound);
    return {f, {f}, {h}};
}

ElementSample random_element(Rng& rng, i64 level, i64 bound) {
    ElementSample out = random_basic(rng, level, bound);
    const int extra = static_cast<int>(rng.uniform(0, 2));
    for (int i = 0; i < extra; ++i) {
        const ElementSample more = random_basic(rng, level, bound);
        out.basics.push_back(more.element);
        out.heads.push_back(more.heads.front());
        out.element = out.element + more.element;
    }
    return out;
}

Gl2Point random_point(Rng& rng, const std::vector<const ElementSample*>& factors, i64 rho_level) {
    GaussQ z0{make_rational(rng.uniform(-8, 7), 16), make_rational(rng.uniform(17, 60), 16)};
    if (rng.uniform(0, 7) == 0) z0 = {Rational(0), Rational(1)};
    Mat2Q g;
    const bool steered = rng.uniform(0, 3) != 0;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const Mat2Q& h = pick(rng, (*it)->heads);
        if (steered) {
            const auto red = reduce_to_fundamental_domain(mobius(g, z0));
            g = h * Mat2Q(red.delta).inverse() * g;
        } else {
            g = h * Mat2Q(random_sl2(rng, 2)) * g;
        }
    }
    Mat2Residue rho = random_residue(rng, rho_level);
    // Half the time ρ ≡ 0 mod 60, which admits every fractional scale in the samples.
    if (rng.coin() && rho_level % 60 == 0) {
        const IntMat2& e = rho.entries();
        const auto times60 = [&](i64 x) { return numtower::mulmod(x, 60, rho_level); };
        rho = Mat2Residue(rho_level, IntMat2{times60(e.a), times60(e.b), times60(e.c), times60(e.d)});
    }
    return gamma_action(random_sl2(rng), random_sl2(rng), {g, rho, z0});
}

std::optional<Gl2Point> flipped(const Gl2Point& p) {
    const auto grho = p.rho.act(p.g);
    if (!grho) return std::nullopt;
    return Gl2Point{p.g.inverse(), *grho, mobius(p.g, p.z)};
}

}  // namespace bcsys::gl2
