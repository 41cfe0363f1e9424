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

#include "bcsys/bcalg/algebra.hpp"

namespace bcsys::bcalg {

using numtower::gcd;
using numtower::lcm;
using numtower::mod;

namespace {

i64 num_of(const Rational& r) { return numtower::numerator_i64(r); }
i64 den_of(const Rational& r) { return numtower::denominator_i64(r); }

void require_same_mode(Mode a, Mode b) {
    if (a != b) throw Error(ErrorKind::ModeMismatch, "operands have different coefficient modes");
}

}  // namespace

CylFunction::CylFunction(i64 level, std::vector<Coefficient> values) : values_(std::move(values)) {
    if (level <= 0 || static_cast<i64>(values_.size()) != level)
        throw Error(ErrorKind::InvalidArgument, "function needs exactly one value per residue");
}

CylFunction CylFunction::constant(i64 level, const Coefficient& c) {
    return {level, std::vector<Coefficient>(static_cast<std::size_t>(level), c)};
}

CylFunction CylFunction::raise(i64 new_level) const {
    if (new_level % level() != 0)
        throw Error(ErrorKind::LevelMismatch, "cannot raise level " + std::to_string(level()) + " to " +
                                                  std::to_string(new_level));
    if (new_level == level()) return *this;
    std::vector<Coefficient> out;
    out.reserve(static_cast<std::size_t>(new_level));
    for (i64 k = 0; k < new_level; ++k) out.push_back(at(k));
    return {new_level, std::move(out)};
}

bool CylFunction::factors_through(i64 level, const BigReal& tol) const {
    if (this->level() % level != 0) return false;
    for (i64 k = level; k < this->level(); ++k)
        if (!close(values_[static_cast<std::size_t>(k)], values_[static_cast<std::size_t>(k % level)], tol)) return false;
    return true;
}

CylFunction CylFunction::lower(i64 new_level) const {
    return {new_level, std::vector<Coefficient>(values_.begin(), values_.begin() + new_level)};
}

bool CylFunction::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

CylFunction alpha_action(i64 n, const CylFunction& f) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "alpha_action needs n ≥ 1");
    const i64 level = numtower::checked_mul(n, f.level());
    const Mode mode = f.values().front().mode();
    const long precision = mode == Mode::numeric ? f.values().front().numeric().precision() : numtower::kDefaultPrecision;
    std::vector<Coefficient> out(static_cast<std::size_t>(level), Coefficient::zero(mode, precision));
    for (i64 k = 0; k < level; k += n) out[static_cast<std::size_t>(k)] = f.at(k / n);
    return {level, std::move(out)};
}

bool equal(const CylFunction& a, const CylFunction& b, const BigReal& tol) {
    const i64 l = lcm(a.level(), b.level());
    for (i64 k = 0; k < l; ++k)
        if (!close(a.at(k), b.at(k), tol)) return false;
    return true;
}

AlgebraElement::AlgebraElement(i64 level, Mode mode, long precision)
    : level_(level), mode_(mode), precision_(precision) {
    if (level <= 0) throw Error(ErrorKind::InvalidArgument, "level must be positive");
}

AlgebraElement::AlgebraElement(i64 level, Mode mode, Terms terms, long precision)
    : AlgebraElement(level, mode, precision) {
    terms_ = std::move(terms);
    normalize();
}

void AlgebraElement::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        const Rational& r = it->first;
        if (r <= 0) throw Error(ErrorKind::InvalidArgument, "ratios must be positive");
        const i64 q = den_of(r);
        if (level_ % q != 0)
            throw Error(ErrorKind::LevelMismatch, "ratio " + numtower::to_string(r) + " needs level divisible by " +
                                                      std::to_string(q));
        CylFunction f = it->second.raise(level_);
        for (i64 k = 0; k < level_; ++k) {
            if (f[k].mode() != mode_) throw Error(ErrorKind::ModeMismatch, "value mode differs from element mode");
            if (k % q != 0) f[k] = Coefficient::zero(mode_, precision_);
        }
        if (f.is_zero()) {
            it = terms_.erase(it);
        } else {
            it->second = std::move(f);
            ++it;
        }
    }
}

CylFunction AlgebraElement::term(const Rational& r) const {
    if (auto it = terms_.find(r); it != terms_.end()) return it->second;
    return CylFunction::constant(level_, Coefficient::zero(mode_, precision_));
}

AlgebraElement AlgebraElement::raise(i64 new_level) const {
    if (new_level == level_) return *this;
    if (new_level % level_ != 0)
        throw Error(ErrorKind::LevelMismatch, "cannot raise level " + std::to_string(level_) + " to " +
                                                  std::to_string(new_level));
    AlgebraElement out(new_level, mode_, precision_);
    for (const auto& [r, f] : terms_) out.terms_.emplace(r, f.raise(new_level));
    return out;
}

AlgebraElement AlgebraElement::shrink(i64 base) const {
    if (level_ % base != 0) throw Error(ErrorKind::LevelMismatch, "shrink base must divide the level");
    const BigReal tol = comparison_tolerance(precision_);
    for (i64 d : numtower::divisors(level_ / base)) {
        const i64 m = base * d;
        if (m == level_) break;
        bool ok = true;
        for (const auto& [r, f] : terms_) {
            if (m % den_of(r) != 0 || !f.factors_through(m, tol)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        AlgebraElement out(m, mode_, precision_);
        for (const auto& [r, f] : terms_) out.terms_.emplace(r, f.lower(m));
        return out;
    }
    return *this;
}

AlgebraElement AlgebraElement::to_numeric(i64 u, long precision) const {
    if (mode_ == Mode::numeric) return *this;
    AlgebraElement out(level_, Mode::numeric, precision);
    for (const auto& [r, f] : terms_) {
        std::vector<Coefficient> vals;
        vals.reserve(f.values().size());
        for (const auto& v : f.values()) vals.push_back(v.embedded(u, precision));
        out.terms_.emplace(r, CylFunction(level_, std::move(vals)));
    }
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    return Rational(-1) * *this;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_mode(x.mode_, y.mode_);
    const i64 l = lcm(x.level_, y.level_);
    AlgebraElement out = x.raise(l);
    out.precision_ = std::max(x.precision_, y.precision_);
    for (const auto& [r, f] : y.raise(l).terms_) {
        auto [it, inserted] = out.terms_.try_emplace(r, f);
        if (!inserted)
            for (i64 k = 0; k < l; ++k) it->second[k] += f.at(k);
    }
    out.normalize();
    return out;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& x) {
    AlgebraElement out = x;
    for (auto& [r, f] : out.terms_)
        for (i64 k = 0; k < out.level_; ++k) f[k] *= c;
    out.normalize();
    return out;
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_mode(x.mode(), y.mode());
    const Mode mode = x.mode();
    const long precision = std::max(x.precision(), y.precision());
    const i64 base = lcm(x.level(), y.level());
    i64 q_all = 1;
    for (const auto& [s, g] : y.terms()) q_all = lcm(q_all, den_of(s));
    const i64 level = numtower::checked_mul(base, q_all);
    const Coefficient zero = Coefficient::zero(mode, precision);

    AlgebraElement::Terms out;
    for (const auto& [s, g] : y.terms()) {
        const i64 p = num_of(s), q = den_of(s);
        for (const auto& [r1, f] : x.terms()) {
            auto [it, inserted] = out.try_emplace(r1 * s, CylFunction::constant(level, zero));
            CylFunction& h = it->second;
            for (i64 k = 0; k < level; k += q) {
                const Coefficient& gv = g.at(k);
                if (gv.is_trivially_zero()) continue;
                // sρ = p·(ρ/q) is known modulo level/q, a multiple of the level of f.
                const Coefficient& fv = f.at(numtower::mulmod(k / q, p, f.level()));
                if (fv.is_trivially_zero()) continue;
                h[k] += fv * gv;
            }
        }
    }
    return AlgebraElement(level, mode, std::move(out), precision).shrink(base);
}

AlgebraElement involution(const AlgebraElement& x) {
    i64 p_all = 1;
    for (const auto& [s, f] : x.terms()) p_all = lcm(p_all, num_of(s));
    const i64 level = numtower::checked_mul(x.level(), p_all);
    const Coefficient zero = Coefficient::zero(x.mode(), x.precision());
    AlgebraElement::Terms out;
    for (const auto& [s, f] : x.terms()) {
        const i64 p = num_of(s), q = den_of(s);
        CylFunction h = CylFunction::constant(level, zero);
        // f*_{q/p}(ρ) = conj f_{p/q}(q·(ρ/p)) for p | ρ.
        for (i64 k = 0; k < level; k += p) h[k] = f.at(numtower::mulmod(k / p, q, x.level())).conj();
        out.emplace(1 / s, std::move(h));
    }
    return AlgebraElement(level, x.mode(), std::move(out), x.precision()).shrink(x.level());
}

BigComplex ratio_power(const Rational& r, const TimeParam& t, long precision) {
    const BigReal logr = numtower::log(BigReal(r, precision + 16));
    const BigReal modulus = numtower::exp(-BigReal(t.im, precision + 16) * logr);
    const BigReal phase = BigReal(t.re, precision + 16) * logr;
    BigComplex z = BigComplex::polar(phase) * modulus;
    BigReal re(precision), im(precision);
    mpfr_set(re.get(), z.re().get(), MPFR_RNDN);
    mpfr_set(im.get(), z.im().get(), MPFR_RNDN);
    return {std::move(re), std::move(im)};
}

AlgebraElement time_evolve(const AlgebraElement& x, const TimeParam& t) {
    AlgebraElement::Terms out;
    if (x.mode() == Mode::exact) {
        if (t.re != 0 || t.im.get_den() != 1)
            throw Error(ErrorKind::ModeMismatch, "exact time evolution needs t = iβ with integer β");
        const long beta = numtower::to_i64(t.im.get_num());
        for (const auto& [r, f] : x.terms()) {
            // r^{it} = r^{−β}.
            Rational base = beta >= 0 ? Rational(1 / r) : r;
            Rational factor(1);
            for (long i = 0; i < (beta >= 0 ? beta : -beta); ++i) factor *= base;
            CylFunction g = f;
            for (i64 k = 0; k < x.level(); ++k) g[k] *= factor;
            out.emplace(r, std::move(g));
        }
    } else {
        for (const auto& [r, f] : x.terms()) {
            const BigComplex factor = ratio_power(r, t, x.precision());
            CylFunction g = f;
            for (i64 k = 0; k < x.level(); ++k) g[k] *= factor;
            out.emplace(r, std::move(g));
        }
    }
    return {x.level(), x.mode(), std::move(out), x.precision()};
}

BigReal comparison_tolerance(long precision) { return numtower::working_tolerance(precision); }

std::optional<std::string> first_difference(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_mode(x.mode(), y.mode());
    const i64 l = lcm(x.level(), y.level());
    const AlgebraElement a = x.raise(l), b = y.raise(l);
    const BigReal tol = comparison_tolerance(std::min(x.precision(), y.precision()));
    std::map<Rational, bool> ratios;
    for (const auto& [r, f] : a.terms()) ratios[r] = true;
    for (const auto& [r, f] : b.terms()) ratios[r] = true;
    for (const auto& [r, unused] : ratios) {
        const CylFunction fa = a.term(r), fb = b.term(r);
        for (i64 k = 0; k < l; ++k)
            if (!close(fa.at(k), fb.at(k), tol))
                return "ratio " + numtower::to_string(r) + ", rho " + std::to_string(k) + " mod " + std::to_string(l) +
                       ": " + fa.at(k).str() + " vs " + fb.at(k).str();
    }
    return std::nullopt;
}

bool equal(const AlgebraElement& x, const AlgebraElement& y) { return !first_difference(x, y).has_value(); }

AlgebraElement gen_e(const QmodZ& r, i64 level, Mode mode, long precision) {
    if (level <= 0 || level % r.den() != 0)
        throw Error(ErrorKind::LevelMismatch, "e(" + r.str() + ") needs a level divisible by " + std::to_string(r.den()));
    const i64 step = r.num() * (level / r.den());
    std::vector<Coefficient> vals;
    vals.reserve(static_cast<std::size_t>(level));
    for (i64 k = 0; k < level; ++k) vals.push_back(Coefficient::root(mode, level, numtower::mulmod(k, step, level), precision));
    AlgebraElement::Terms t;
    t.emplace(Rational(1), CylFunction(level, std::move(vals)));
    return {level, mode, std::move(t), precision};
}

AlgebraElement gen_mu(i64 n, i64 level, Mode mode, long precision) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "mu_n needs n ≥ 1");
    if (level <= 0 || level % n != 0)
        throw Error(ErrorKind::LevelMismatch, "mu_" + std::to_string(n) + " needs a level divisible by " + std::to_string(n));
    AlgebraElement::Terms t;
    t.emplace(Rational(n), CylFunction::constant(level, Coefficient::one(mode, precision)));
    return {level, mode, std::move(t), precision};
}

AlgebraElement identity(i64 level, Mode mode, long precision) { return gen_mu(1, level, mode, precision); }

void to_json(numtower::Json& j, const AlgebraElement& x) {
    numtower::Json terms = numtower::Json::array();
    for (const auto& [r, f] : x.terms()) {
        numtower::Json values = numtower::Json::array();
        for (const auto& v : f.values()) values.push_back(numtower::Json(v));
        terms.push_back(numtower::Json{{"ratio", numtower::to_string(r)}, {"values", std::move(values)}});
    }
    j = numtower::Json{{"level", x.level()}, {"mode", to_string(x.mode())}, {"precision", x.precision()},
                       {"terms", std::move(terms)}};
}

AlgebraElement algebra_element_from_json(const numtower::Json& j) {
    const i64 level = j.at("level").get<i64>();
    const Mode mode = parse_mode(j.at("mode").get<std::string>());
    const long precision = j.value("precision", numtower::kDefaultPrecision);
    AlgebraElement::Terms terms;
    for (const auto& t : j.at("terms")) {
        std::vector<Coefficient> values;
        for (const auto& v : t.at("values")) values.push_back(coefficient_from_json(v));
        const i64 n = static_cast<i64>(values.size());
        terms.emplace(numtower::parse_rational(t.at("ratio").get<std::string>()), CylFunction(n, std::move(values)));
    }
    return {level, mode, std::move(terms), precision};
}

}  // namespace bcsys::bcalg
