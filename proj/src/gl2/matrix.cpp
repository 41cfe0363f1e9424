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

#include "bcsys/gl2/matrix.hpp"

#include <map>
#include <mutex>

#include "bcsys/error.hpp"

namespace bcsys::gl2 {

using numtower::make_rational;
using numtower::checked_add;
using numtower::checked_mul;
using numtower::gcd;
using numtower::mod;

namespace {

Rational floor_of(const Rational& q) {
    numtower::Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

int compare(const Rational& x, const Rational& y) { return cmp(x, y); }

}  // namespace

i64 IntMat2::det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

i64 IntMat2::content() const { return gcd(gcd(a, b), gcd(c, d)); }

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
            checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
            checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
            checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

std::string IntMat2::str() const {
    return "(" + std::to_string(a) + " " + std::to_string(b) + "; " + std::to_string(c) + " " + std::to_string(d) + ")";
}

Mat2Q::Mat2Q(Rational a, Rational b, Rational c, Rational d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto& x : e_) x.canonicalize();
    if (det() <= 0) throw Error(ErrorKind::InvalidArgument, "matrix " + str() + " does not have positive determinant");
}

Mat2Q::Mat2Q(const IntMat2& m) : Mat2Q(Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d)) {}

Mat2Q Mat2Q::inverse() const {
    const Rational dt = det();
    return {e_[3] / dt, -e_[1] / dt, -e_[2] / dt, e_[0] / dt};
}

bool Mat2Q::is_integral() const {
    for (const auto& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

Mat2Q::Integral Mat2Q::integral() const {
    numtower::Integer e(1);
    for (const auto& x : e_) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), x.get_den_mpz_t());
    std::array<i64, 4> m{};
    for (std::size_t k = 0; k < 4; ++k) {
        const Rational scaled = e_[k] * Rational(e);
        m[k] = numtower::to_i64(scaled.get_num());
    }
    return {{m[0], m[1], m[2], m[3]}, numtower::to_i64(e)};
}

Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
            x.c() * y.b() + x.d() * y.d()};
}

std::strong_ordering operator<=>(const Mat2Q& x, const Mat2Q& y) {
    for (std::size_t k = 0; k < 4; ++k)
        if (int c = compare(x.e_[k], y.e_[k]); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Mat2Q::str() const {
    using numtower::to_string;
    return "(" + to_string(e_[0]) + " " + to_string(e_[1]) + "; " + to_string(e_[2]) + " " + to_string(e_[3]) + ")";
}

Mat2Q hermite_form(const Mat2Q& g, IntMat2& gamma) {
    const auto [m, e] = g.integral();
    i64 x = 0, y = 0;
    const i64 g0 = numtower::extended_gcd(m.a, m.c, x, y);
    const IntMat2 u{x, y, -m.c / g0, m.a / g0};
    IntMat2 h = u * m;
    // Now h = (g0 b'; 0 d') with d' = det/g0 > 0; bring b' into [0, d').
    const i64 q = numtower::floor_div(h.b, h.d);
    const IntMat2 shift{1, -q, 0, 1};
    h = shift * h;
    gamma = shift * u;
    return {make_rational(h.a, e), make_rational(h.b, e), Rational(0), make_rational(h.d, e)};
}

Mat2Q hermite_form(const Mat2Q& g) {
    IntMat2 unused;
    return hermite_form(g, unused);
}

std::strong_ordering operator<=>(const DoubleCoset& x, const DoubleCoset& y) {
    if (int c = compare(x.scale, y.scale); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return x.m <=> y.m;
}

std::string DoubleCoset::str() const { return numtower::to_string(scale) + "*diag(1," + std::to_string(m) + ")"; }

DoubleCoset double_coset(const Mat2Q& g) {
    const auto [m, e] = g.integral();
    const i64 k = m.content();
    return {make_rational(k, e), m.det() / (k * k)};
}

std::vector<Mat2Q> hecke_cosets(i64 n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "hecke_cosets needs n >= 1");
    std::vector<Mat2Q> out;
    for (i64 a : numtower::divisors(n)) {
        const i64 d = n / a;
        for (i64 b = 0; b < d; ++b) out.emplace_back(Rational(a), Rational(b), Rational(0), Rational(d));
    }
    return out;
}

const std::vector<Mat2Q>& left_cosets(const DoubleCoset& dc) {
    static std::mutex lock;
    static std::map<DoubleCoset, std::vector<Mat2Q>> cache;
    const std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find(dc); it != cache.end()) return it->second;
    std::vector<Mat2Q> out;
    for (i64 a : numtower::divisors(dc.m)) {
        const i64 d = dc.m / a;
        for (i64 b = 0; b < d; ++b)
            if (gcd(gcd(a, b), d) == 1) out.emplace_back(dc.scale * a, dc.scale * b, Rational(0), dc.scale * d);
    }
    return cache.emplace(dc, std::move(out)).first->second;
}

i64 height(const Rational& q) {
    const i64 p = numtower::to_i64(abs(q.get_num()));
    return std::max(p, numtower::to_i64(q.get_den()));
}

Mat2Residue::Mat2Residue(i64 level, IntMat2 entries) : level_(level) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
    m_ = {mod(entries.a, level), mod(entries.b, level), mod(entries.c, level), mod(entries.d, level)};
}

Mat2Residue Mat2Residue::left(const IntMat2& g) const {
    const i64 n = level_;
    return {n,
            {mod(numtower::mulmod(g.a, m_.a, n) + numtower::mulmod(g.b, m_.c, n), n), mod(numtower::mulmod(g.a, m_.b, n) + numtower::mulmod(g.b, m_.d, n), n),
             mod(numtower::mulmod(g.c, m_.a, n) + numtower::mulmod(g.d, m_.c, n), n), mod(numtower::mulmod(g.c, m_.b, n) + numtower::mulmod(g.d, m_.d, n), n)}};
}

bool Mat2Residue::admits(const Mat2Q& g) const { return act(g).has_value(); }

std::optional<Mat2Residue> Mat2Residue::act(const Mat2Q& g) const {
    const auto [a, e] = g.integral();
    if (level_ % e != 0)
        throw Error(ErrorKind::LevelMismatch, "cannot decide membership of " + g.str() + " at level " + std::to_string(level_));
    const IntMat2 p = left(a).m_;
    for (i64 x : {p.a, p.b, p.c, p.d})
        if (x % e != 0) return std::nullopt;
    return Mat2Residue(level_ / e, IntMat2{p.a / e, p.b / e, p.c / e, p.d / e});
}

Mat2Residue Mat2Residue::lower(i64 level) const {
    if (level < 1 || level_ % level != 0)
        throw Error(ErrorKind::LevelMismatch, std::to_string(level) + " does not divide " + std::to_string(level_));
    return {level, m_};
}

i64 Mat2Residue::trace_pairing(const IntMat2& k, i64 n) const {
    if (n < 1 || level_ % n != 0)
        throw Error(ErrorKind::LevelMismatch, "character of level " + std::to_string(n) + " on residues of level " +
                                                  std::to_string(level_));
    return mod(numtower::mulmod(k.a, m_.a, n) + numtower::mulmod(k.b, m_.c, n) + numtower::mulmod(k.c, m_.b, n) + numtower::mulmod(k.d, m_.d, n), n);
}

std::string Mat2Residue::str() const { return m_.str() + " mod " + std::to_string(level_); }

std::string GaussQ::str() const { return numtower::to_string(x) + "+" + numtower::to_string(y) + "i"; }

GaussQ mobius(const Mat2Q& g, const GaussQ& z) {
    const Rational nr = g.a() * z.x + g.b(), ni = g.a() * z.y;
    const Rational dr = g.c() * z.x + g.d(), di = g.c() * z.y;
    const Rational den = dr * dr + di * di;
    return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
}

FundamentalReduction reduce_to_fundamental_domain(const GaussQ& z) {
    if (z.y <= 0) throw Error(ErrorKind::DomainError, "point " + z.str() + " is not in the upper half plane");
    const IntMat2 s_inv{0, 1, -1, 0};
    GaussQ w = z;
    IntMat2 delta;
    const auto invert = [&] {
        const Rational n = w.x * w.x + w.y * w.y;
        w = {-w.x / n, w.y / n};
        delta = delta * s_inv;
    };
    for (;;) {
        const Rational shift = floor_of(w.x + Rational(1, 2));
        if (shift != 0) {
            const i64 n = numtower::to_i64(shift.get_num());
            w.x -= shift;
            delta = delta * IntMat2{1, n, 0, 1};
        }
        if (w.x * w.x + w.y * w.y < 1) {
            invert();
            continue;
        }
        break;
    }
    if (w.x * w.x + w.y * w.y == 1 && w.x > 0) invert();
    return {w, delta};
}

std::vector<IntMat2> stabilizer(const GaussQ& z0) {
    const IntMat2 one, s{0, -1, 1, 0};
    if (z0.x == 0 && z0.y == 1) return {one, -one, s, -s};
    return {one, -one};
}

void to_json(numtower::Json& j, const IntMat2& m) { j = numtower::Json::array({{m.a, m.b}, {m.c, m.d}}); }

void to_json(numtower::Json& j, const Mat2Q& g) {
    using numtower::to_string;
    j = numtower::Json::array({{to_string(g.a()), to_string(g.b())}, {to_string(g.c()), to_string(g.d())}});
}

void to_json(numtower::Json& j, const Mat2Residue& r) { j = {{"level", r.level()}, {"entries", r.entries()}}; }

IntMat2 int_mat2_from_json(const numtower::Json& j) {
    return {j.at(0).at(0).get<i64>(), j.at(0).at(1).get<i64>(), j.at(1).at(0).get<i64>(), j.at(1).at(1).get<i64>()};
}

Mat2Q mat2q_from_json(const numtower::Json& j) {
    const auto q = [](const numtower::Json& x) {
        return x.is_string() ? numtower::parse_rational(x.get<std::string>()) : Rational(x.get<i64>());
    };
    return {q(j.at(0).at(0)), q(j.at(0).at(1)), q(j.at(1).at(0)), q(j.at(1).at(1))};
}

}  // namespace bcsys::gl2
