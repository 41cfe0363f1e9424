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

#include "bcsys/numtower/rational.hpp"

#include <cctype>

namespace bcsys::numtower {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(s) + "'");
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

}  // namespace

Rational make_rational(i64 p, i64 q) {
    if (q == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rational r{Integer(static_cast<long>(p)), Integer(static_cast<long>(q))};
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer p = parse_integer(text.substr(0, slash));
        Integer q = parse_integer(text.substr(slash + 1));
        if (q == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if (!(whole.empty() || all_digits(whole)) || !(frac.empty() || all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw Error(ErrorKind::InvalidArgument, "not a decimal: '" + std::string(text) + "'");
        Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational r(digits, scale);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

i64 to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(ErrorKind::Overflow, "integer does not fit in 64 bits");
    return static_cast<i64>(z.get_si());
}

i64 numerator_i64(const Rational& q) { return to_i64(q.get_num()); }
i64 denominator_i64(const Rational& q) { return to_i64(q.get_den()); }

}  // namespace bcsys::numtower
