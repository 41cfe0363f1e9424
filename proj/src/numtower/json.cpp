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

#include "bcsys/numtower/json.hpp"

namespace bcsys::numtower {

void to_json(Json& j, const QmodZ& r) { j = Json{{"num", r.num()}, {"den", r.den()}}; }

void from_json(const Json& j, QmodZ& r) { r = QmodZ(j.at("num").get<i64>(), j.at("den").get<i64>()); }

void to_json(Json& j, const ResidueEndo& rho) { j = Json{{"level", rho.level()}, {"residue", rho.residue()}}; }

void from_json(const Json& j, ResidueEndo& rho) {
    rho = ResidueEndo(j.at("level").get<i64>(), j.at("residue").get<i64>());
}

void to_json(Json& j, const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& [k, v] : c.terms()) coeffs.push_back(Json{{"k", k}, {"c", to_string(v)}});
    j = Json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const Json& j, Cyclotomic& c) {
    Cyclotomic::Terms terms;
    for (const auto& t : j.at("coeffs")) terms[t.at("k").get<i64>()] += parse_rational(t.at("c").get<std::string>());
    c = Cyclotomic(j.at("conductor").get<i64>(), std::move(terms));
}

void to_json(Json& j, const BigReal& x) { j = x.str(static_cast<int>(x.precision() * 0.30103) + 1); }

void to_json(Json& j, const BigComplex& z) {
    j = Json{{"re", Json(z.re())}, {"im", Json(z.im())}, {"precision", z.precision()}};
}

BigComplex big_complex_from_json(const Json& j) {
    const long precision = j.at("precision").get<long>();
    return {BigReal::parse(j.at("re").get<std::string>(), precision),
            BigReal::parse(j.at("im").get<std::string>(), precision)};
}

void to_json(Json& j, const Bounded& b) { j = Json{{"value", Json(b.value)}, {"bound", b.bound.str(6)}}; }

}  // namespace bcsys::numtower
