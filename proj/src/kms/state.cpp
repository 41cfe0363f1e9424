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

#include "bcsys/kms/state.hpp"

#include "bcsys/error.hpp"

namespace bcsys::kms {

Beta::Beta(Rational value) : value_(std::move(value)) {
    if (*value_ <= 0) throw Error(ErrorKind::DomainError, "beta must be positive");
}

Beta Beta::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "∞") return infinity();
    return Beta(numtower::parse_rational(text));
}

const Rational& Beta::value() const {
    if (!value_) throw Error(ErrorKind::DomainError, "beta is infinite");
    return *value_;
}

BigReal Beta::real(long precision) const {
    if (!value_) return BigReal::parse("inf", precision);
    return BigReal(*value_, precision);
}

std::string Beta::str() const { return value_ ? numtower::to_string(*value_) : "inf"; }

BigComplex StateValue::numeric(long precision) const {
    if (const auto* c = std::get_if<Cyclotomic>(&value)) return c->embed(precision);
    return std::get<BigComplex>(value);
}

void to_json(numtower::Json& j, const Beta& b) { j = b.str(); }

void to_json(numtower::Json& j, const StateValue& v) {
    j = numtower::Json::object();
    j["beta"] = v.beta;
    if (const auto* c = std::get_if<Cyclotomic>(&v.value)) {
        j["exact"] = *c;
        j["value"] = c->embed(numtower::kDefaultPrecision);
    } else {
        j["value"] = std::get<BigComplex>(v.value);
    }
    j["error_bound"] = v.error_bound;
    j["method"] = v.method;
}

}  // namespace bcsys::kms
