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

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bcsys/numtower/bigfloat.hpp"
#include "bcsys/numtower/cyclotomic.hpp"
#include "bcsys/numtower/json.hpp"
#include "bcsys/numtower/rational.hpp"

namespace bcsys::kms {

using numtower::BigComplex;
using numtower::BigReal;
using numtower::Cyclotomic;
using numtower::Rational;

/// Inverse temperature: a positive rational, or ∞.
class Beta {
public:
    Beta(Rational value);
    Beta(long value) : Beta(Rational(value)) {}
    static Beta infinity() { return Beta(); }
    /// "inf", "p/q" or an exact decimal.
    static Beta parse(std::string_view text);

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws DomainError at ∞.
    const Rational& value() const;
    BigReal real(long precision) const;
    std::string str() const;

    friend bool operator==(const Beta&, const Beta&) = default;

private:
    Beta() = default;
    std::optional<Rational> value_;
};

/// φ_β evaluated on something, with |true − value| ≤ error_bound.
struct StateValue {
    std::variant<BigComplex, Cyclotomic> value;
    BigReal error_bound;
    Beta beta;
    std::string method;

    bool is_exact() const { return std::holds_alternative<Cyclotomic>(value); }
    /// Exact values go through the standard embedding.
    BigComplex numeric(long precision) const;
};

/// How the Dirichlet series is cut off. Only the integral tail bound exists.
struct TruncationPolicy {
    long max_terms = 100000;
    enum class TailBound { integral } tail_bound = TailBound::integral;
};

void to_json(numtower::Json& j, const Beta& b);
void to_json(numtower::Json& j, const StateValue& v);

}  // namespace bcsys::kms
