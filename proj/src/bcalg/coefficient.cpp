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

#include "bcsys/bcalg/coefficient.hpp"

namespace bcsys::bcalg {

namespace {

[[noreturn]] void mismatch() { throw Error(ErrorKind::ModeMismatch, "exact and numeric coefficients mixed"); }

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "numeric"; }

Mode parse_mode(const std::string& text) {
    if (text == "exact") return Mode::exact;
    if (text == "numeric") return Mode::numeric;
    throw Error(ErrorKind::InvalidArgument, "unknown coefficient mode '" + text + "'");
}

Coefficient Coefficient::zero(Mode mode, long precision) {
    if (mode == Mode::exact) return Cyclotomic();
    return BigComplex(precision);
}

Coefficient Coefficient::one(Mode mode, long precision) {
    if (mode == Mode::exact) return Cyclotomic(Rational(1));
    return BigComplex(BigReal(1L, precision));
}

Coefficient Coefficient::root(Mode mode, i64 conductor, i64 k, long precision) {
    if (mode == Mode::exact) return Cyclotomic::root(conductor, k);
    return BigComplex::unit_root(numtower::make_rational(k, conductor), precision);
}

const Cyclotomic& Coefficient::exact() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return *c;
    mismatch();
}

const BigComplex& Coefficient::numeric() const {
    if (const auto* z = std::get_if<BigComplex>(&v_)) return *z;
    mismatch();
}

bool Coefficient::is_zero() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return c->terms().empty() || c->is_zero();
    return std::get<BigComplex>(v_).is_zero();
}

bool Coefficient::is_trivially_zero() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return c->terms().empty();
    return std::get<BigComplex>(v_).is_zero();
}

Coefficient Coefficient::conj() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return c->conj();
    return std::get<BigComplex>(v_).conj();
}

Coefficient Coefficient::embedded(i64 u, long precision) const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return c->embed(u, precision);
    return *this;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (mode() != o.mode()) mismatch();
    if (auto* c = std::get_if<Cyclotomic>(&v_)) {
        const Cyclotomic& oc = std::get<Cyclotomic>(o.v_);
        if (oc.terms().empty()) return *this;
        if (c->terms().empty()) {
            *c = oc;
            return *this;
        }
        *c += oc;
    } else {
        std::get<BigComplex>(v_) += std::get<BigComplex>(o.v_);
    }
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    if (mode() != o.mode()) mismatch();
    if (auto* c = std::get_if<Cyclotomic>(&v_))
        *c -= std::get<Cyclotomic>(o.v_);
    else
        std::get<BigComplex>(v_) -= std::get<BigComplex>(o.v_);
    return *this;
}

Coefficient& Coefficient::operator*=(const Rational& r) {
    if (auto* c = std::get_if<Cyclotomic>(&v_))
        *c *= r;
    else {
        auto& z = std::get<BigComplex>(v_);
        z *= BigReal(r, z.precision());
    }
    return *this;
}

Coefficient& Coefficient::operator*=(const BigComplex& w) {
    if (mode() != Mode::numeric) mismatch();
    std::get<BigComplex>(v_) *= w;
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.mode() != b.mode()) mismatch();
    if (const auto* c = std::get_if<Cyclotomic>(&a.v_)) {
        const Cyclotomic& d = std::get<Cyclotomic>(b.v_);
        if (c->terms().empty() || d.terms().empty()) return Cyclotomic();
        if (c->conductor() == 1 && c->terms().size() == 1 && c->terms().begin()->second == 1) return d;
        if (d.conductor() == 1 && d.terms().size() == 1 && d.terms().begin()->second == 1) return *c;
        return *c * d;
    }
    return std::get<BigComplex>(a.v_) * std::get<BigComplex>(b.v_);
}

bool close(const Coefficient& a, const Coefficient& b, const BigReal& tol) {
    if (a.mode() != b.mode()) mismatch();
    if (const auto* c = std::get_if<Cyclotomic>(&a.v_)) return *c == std::get<Cyclotomic>(b.v_);
    return (std::get<BigComplex>(a.v_) - std::get<BigComplex>(b.v_)).abs() <= tol;
}

std::string Coefficient::str() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return c->str();
    return std::get<BigComplex>(v_).str(12);
}

void to_json(numtower::Json& j, const Coefficient& c) {
    if (c.mode() == Mode::exact)
        j = numtower::Json(c.exact());
    else
        j = numtower::Json(c.numeric());
}

Coefficient coefficient_from_json(const numtower::Json& j) {
    if (j.contains("conductor")) return j.get<Cyclotomic>();
    return numtower::big_complex_from_json(j);
}

}  // namespace bcsys::bcalg
