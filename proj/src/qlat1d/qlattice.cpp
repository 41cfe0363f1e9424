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

#include "bcsys/qlat1d/qlattice.hpp"

namespace bcsys::qlat1d {

using numtower::gcd;
using numtower::to_string;

QLattice1D::QLattice1D(Rational scale, ResidueEndo rho) : scale_(std::move(scale)), rho_(rho) {
    scale_.canonicalize();
    if (scale_ <= 0) throw Error(ErrorKind::InvalidArgument, "lattice scale must be positive");
}

std::string QLattice1D::str() const { return "(" + to_string(scale_) + "Z, " + rho_.str() + ")"; }

bool same_lattice(const QLattice1D& a, const QLattice1D& b) {
    const i64 g = gcd(a.level(), b.level());
    return a.scale() == b.scale() && a.rho().lower(g) == b.rho().lower(g);
}

std::optional<Witness> commensurability_witness(const QLattice1D& a, const QLattice1D& b) {
    const Rational ratio = b.scale() / a.scale();
    const i64 m = numtower::numerator_i64(ratio);
    const i64 n = numtower::denominator_i64(ratio);
    const i64 g = gcd(a.level(), b.level());
    if (a.rho().lower(g).scaled(n) != b.rho().lower(g).scaled(m)) return std::nullopt;
    return Witness{m, n};
}

bool GroupoidPoint::is_member(const Rational& ratio, const ResidueEndo& rho) {
    if (ratio <= 0) return false;
    const numtower::Integer& q = ratio.get_den();
    if (!q.fits_slong_p()) return false;
    return rho.divisible_by(q.get_si());
}

GroupoidPoint::GroupoidPoint(Rational ratio, ResidueEndo rho) : ratio_(std::move(ratio)), rho_(rho) {
    ratio_.canonicalize();
    if (!is_member(ratio_, rho_))
        throw Error(ErrorKind::NotInGroupoid, "(" + to_string(ratio_) + ", " + rho_.str() + ") is not in the groupoid");
}

ResidueEndo GroupoidPoint::target() const {
    const i64 p = numtower::numerator_i64(ratio_);
    const i64 q = numtower::denominator_i64(ratio_);
    const i64 level = rho_.level() / q;
    return {level, numtower::mulmod(rho_.residue() / q, p, level)};
}

std::string GroupoidPoint::str() const { return "(" + to_string(ratio_) + ", " + rho_.str() + ")"; }

std::pair<QLattice1D, QLattice1D> eta(const GroupoidPoint& p) {
    return {QLattice1D(1 / p.ratio(), p.target()), QLattice1D(Rational(1), p.rho())};
}

GroupoidPoint groupoid_compose(const GroupoidPoint& p1, const GroupoidPoint& p2) {
    if (p1.rho().level() != p2.rho().level())
        throw Error(ErrorKind::NotComposable, "groupoid points at different levels");
    const ResidueEndo t2 = p2.target();
    if (p1.rho().lower(t2.level()) != t2)
        throw Error(ErrorKind::NotComposable, "target " + t2.str() + " differs from source " + p1.rho().str());
    return {p1.ratio() * p2.ratio(), p2.rho()};
}

void to_json(numtower::Json& j, const QLattice1D& l) {
    j = numtower::Json{{"scale", to_string(l.scale())}, {"level", l.level()}, {"residue", l.rho().residue()}};
}

void to_json(numtower::Json& j, const GroupoidPoint& p) {
    j = numtower::Json{{"ratio", to_string(p.ratio())}, {"level", p.rho().level()}, {"residue", p.rho().residue()}};
}

QLattice1D lattice_from_json(const numtower::Json& j) {
    return {numtower::parse_rational(j.at("scale").get<std::string>()),
            ResidueEndo(j.at("level").get<i64>(), j.at("residue").get<i64>())};
}

GroupoidPoint point_from_json(const numtower::Json& j) {
    return {numtower::parse_rational(j.at("ratio").get<std::string>()),
            ResidueEndo(j.at("level").get<i64>(), j.at("residue").get<i64>())};
}

}  // namespace bcsys::qlat1d
