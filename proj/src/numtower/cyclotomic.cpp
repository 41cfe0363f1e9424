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

#include "bcsys/numtower/cyclotomic.hpp"

#include <memory>
#include <mutex>

namespace bcsys::numtower {

namespace {

using Sparse = std::vector<std::pair<i64, i64>>;

Sparse compute_cyclotomic(i64 n) {
    // Φ_n = (x^n − 1) / Π_{d | n, d < n} Φ_d, by exact monic long division.
    std::vector<i64> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (i64 d : divisors(n)) {
        if (d == n) continue;
        const Sparse& div = cyclotomic_polynomial(d);
        const i64 deg = div.back().first;
        const std::size_t top = num.size() - 1;
        std::vector<i64> quot(top - static_cast<std::size_t>(deg) + 1, 0);
        for (std::size_t t = top + 1; t-- > static_cast<std::size_t>(deg);) {
            const i64 c = num[t];
            if (c == 0) continue;
            quot[t - static_cast<std::size_t>(deg)] = c;
            for (const auto& [e, a] : div)
                num[t - static_cast<std::size_t>(deg) + static_cast<std::size_t>(e)] =
                    checked_add(num[t - static_cast<std::size_t>(deg) + static_cast<std::size_t>(e)], -checked_mul(c, a));
        }
        num = std::move(quot);
    }
    Sparse out;
    for (std::size_t k = 0; k < num.size(); ++k)
        if (num[k] != 0) out.emplace_back(static_cast<i64>(k), num[k]);
    return out;
}

}  // namespace

const std::vector<std::pair<i64, i64>>& cyclotomic_polynomial(i64 n) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic polynomial index must be positive");
    static std::mutex mutex;
    static std::map<i64, std::unique_ptr<const Sparse>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto computed = std::make_unique<const Sparse>(compute_cyclotomic(n));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(computed));
    return *it->second;
}

Cyclotomic::Cyclotomic(Rational c) {
    if (c != 0) terms_.emplace(0, std::move(c));
}

Cyclotomic::Cyclotomic(i64 conductor, Terms terms) : conductor_(conductor) {
    if (conductor <= 0) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    for (auto& [k, c] : terms) {
        if (c == 0) continue;
        auto [it, inserted] = terms_.emplace(mod(k, conductor), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
}

Cyclotomic Cyclotomic::root(i64 conductor, i64 k) { return {conductor, Terms{{k, Rational(1)}}}; }

Cyclotomic Cyclotomic::from_qmodz(const QmodZ& r) { return root(r.den(), r.num()); }

Cyclotomic Cyclotomic::raise(i64 new_conductor) const {
    if (new_conductor <= 0 || new_conductor % conductor_ != 0)
        throw Error(ErrorKind::LevelMismatch, "conductor " + std::to_string(conductor_) + " does not divide " +
                                                  std::to_string(new_conductor));
    if (new_conductor == conductor_) return *this;
    const i64 f = new_conductor / conductor_;
    Cyclotomic out;
    out.conductor_ = new_conductor;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k * f, c);
    return out;
}

Cyclotomic Cyclotomic::canonical() const {
    const Sparse& phi = cyclotomic_polynomial(conductor_);
    const i64 deg = phi.back().first;
    Cyclotomic out = *this;
    Terms& t = out.terms_;
    while (!t.empty()) {
        auto top = std::prev(t.end());
        if (top->first < deg) break;
        const i64 shift = top->first - deg;
        const Rational c = top->second;
        t.erase(top);
        for (std::size_t j = 0; j + 1 < phi.size(); ++j) {
            const auto& [e, a] = phi[j];
            auto [it, inserted] = t.try_emplace(shift + e, 0);
            it->second -= c * a;
            if (it->second == 0) t.erase(it);
        }
    }
    return out;
}

bool Cyclotomic::is_zero() const { return terms_.empty() || canonical().terms_.empty(); }

std::optional<Rational> Cyclotomic::as_rational() const {
    const Cyclotomic c = canonical();
    if (c.terms_.empty()) return Rational(0);
    if (c.terms_.size() == 1 && c.terms_.begin()->first == 0) return c.terms_.begin()->second;
    return std::nullopt;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out;
    out.conductor_ = conductor_;
    for (const auto& [k, c] : terms_) out.terms_.emplace(mod(-k, conductor_), c);
    return out;
}

Cyclotomic Cyclotomic::galois(i64 u) const {
    if (gcd(mod(u, conductor_), conductor_) != 1)
        throw Error(ErrorKind::NonInvertible, std::to_string(u) + " is not a unit mod " + std::to_string(conductor_));
    Cyclotomic out;
    out.conductor_ = conductor_;
    for (const auto& [k, c] : terms_) out.terms_.emplace(mulmod(k, u, conductor_), c);
    return out;
}

BigComplex Cyclotomic::embed(i64 u, long precision) const {
    if (gcd(mod(u, conductor_), conductor_) != 1)
        throw Error(ErrorKind::NonInvertible, std::to_string(u) + " is not a unit mod " + std::to_string(conductor_));
    BigComplex sum(precision);
    for (const auto& [k, c] : terms_) {
        const BigComplex z = BigComplex::unit_root(make_rational(mulmod(k, u, conductor_), conductor_), precision);
        sum += z * BigReal(c, precision);
    }
    return sum;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.conductor_ != conductor_) {
        const i64 l = lcm(conductor_, o.conductor_);
        *this = raise(l);
        return *this += o.raise(l);
    }
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const i64 l = lcm(a.conductor_, b.conductor_);
    const i64 fa = l / a.conductor_, fb = l / b.conductor_;
    Cyclotomic out;
    out.conductor_ = l;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(mod(mulmod(ka, fa, l) + mulmod(kb, fb, l), l), 0);
            it->second += ca * cb;
            if (it->second == 0) out.terms_.erase(it);
        }
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (a.conductor_ == b.conductor_ && a.terms_ == b.terms_) return true;
    return (a - b).is_zero();
}

std::string Cyclotomic::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += "zeta_" + std::to_string(conductor_) + "^" + std::to_string(k);
    }
    return out;
}

}  // namespace bcsys::numtower
