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

#include "bcsys/kms/bc.hpp"

#include <bit>

#include "bcsys/error.hpp"
#include "bcsys/numtower/hurwitz.hpp"

namespace bcsys::kms {

using numtower::Bounded;
using numtower::exp2i;
using numtower::mulmod;

namespace {

const Rational& require_low(const Beta& beta) {
    if (beta.is_infinite()) throw Error(ErrorKind::DomainError, "beta must be finite here");
    if (beta.value() <= 1) throw Error(ErrorKind::DomainError, "the series diverges for beta <= 1");
    return beta.value();
}

void require_unit(i64 u, i64 b) {
    if (numtower::gcd(numtower::mod(u, b), b) != 1)
        throw Error(ErrorKind::NonInvertible, "iota exponent " + std::to_string(u) + " is not a unit mod " + std::to_string(b));
}

long guard_precision(long precision, long terms) {
    return precision + 32 + static_cast<long>(std::bit_width(static_cast<unsigned long>(terms)));
}

BigReal narrow(const BigReal& x, long precision) {
    BigReal y(precision);
    mpfr_set(y.get(), x.get(), MPFR_RNDN);
    return y;
}

BigComplex narrow(const BigComplex& z, long precision) {
    return {narrow(z.re(), precision), narrow(z.im(), precision)};
}

// Tail bound plus whatever summation rounding it cannot absorb. The integral bound
// overestimates the true tail by at least ½(M+½)^{−β}; rounding below that is covered.
BigReal truncation_error(const Rational& beta, long terms, const BigReal& sum, long work, long precision) {
    const BigReal tail = integral_tail_bound(beta, terms, precision);
    const BigReal rounding = BigReal(terms, work) * sum * exp2i(-work + 2, work);
    BigReal half_shift(Rational(2 * terms + 1, 2), work);
    const BigReal slack = BigReal(0.5, work) * numtower::pow(half_shift, -BigReal(beta, work));
    return rounding > slack ? tail + narrow(rounding - slack, precision) : tail;
}

// Per-class partial sums A_j = Σ_{n≤M, n≡j mod b} weight(n), summed from n = M down.
template <typename Weight>
std::vector<BigReal> class_sums(i64 b, long terms, long work, Weight weight) {
    std::vector<BigReal> sums(static_cast<std::size_t>(b), BigReal(work));
    BigReal w(work);
    for (long n = terms; n >= 1; --n) {
        weight(w, n);
        sums[static_cast<std::size_t>(n % b)] += w;
    }
    return sums;
}

// n^{−β} into w; integer β avoids the general power.
class InversePower {
public:
    InversePower(const Rational& beta, long work)
        : exponent_(Rational(-beta), work),
          integral_(beta.get_den() == 1 && beta.get_num().fits_ulong_p()),
          k_(integral_ ? beta.get_num().get_ui() : 0) {}

    void operator()(BigReal& w, long n) const {
        if (integral_) {
            mpfr_ui_pow_ui(w.get(), static_cast<unsigned long>(n), k_, MPFR_RNDN);
            mpfr_ui_div(w.get(), 1, w.get(), MPFR_RNDN);
        } else {
            mpfr_ui_pow(w.get(), static_cast<unsigned long>(n), exponent_.get(), MPFR_RNDN);
        }
    }

private:
    BigReal exponent_;
    bool integral_;
    unsigned long k_;
};

struct SeriesValue {
    BigComplex value;
    BigReal sum;
};

// Σ A_j ι_u(ζ_b^{aj}) / Σ A_j.
SeriesValue ratio(const std::vector<BigReal>& sums, const QmodZ& r, i64 u, long work) {
    const i64 b = r.den();
    BigComplex num(work);
    BigReal total(work);
    for (i64 j = 0; j < b; ++j) {
        const auto& a = sums[static_cast<std::size_t>(j)];
        total += a;
        num += BigComplex::unit_root(Rational(mulmod(mulmod(u, r.num(), b), j, b), b), work) * a;
    }
    return {num / BigComplex(total), total};
}

// The direct Dirichlet or the diagonal Gibbs truncation: both share the same error model,
// |N/Z − N_M/S_M| ≤ T(1 + |v|)/S_M, since |Σ_{n>M} n^{−β}ζ^{an}| ≤ Σ_{n>M} n^{−β} ≤ T.
StateValue truncated_value(const SeriesValue& s, const Beta& beta, long terms, long work, long precision,
                           const char* method) {
    const Rational& b = beta.value();
    const BigReal t = truncation_error(b, terms, s.sum, work, precision);
    const BigReal one(1L, precision);
    BigReal bound = t * (one + narrow(s.value.abs(), precision)) / narrow(s.sum, precision);
    bound += numtower::working_tolerance(precision);
    return {narrow(s.value, precision), bound, beta, method};
}

}  // namespace

BigReal integral_tail_bound(const Rational& beta, long terms, long precision) {
    if (terms < 1) throw Error(ErrorKind::InvalidArgument, "truncation needs at least one term");
    if (beta <= 1) throw Error(ErrorKind::DomainError, "the series diverges for beta <= 1");
    const Rational e = 1 - beta;
    BigReal m(terms, precision + 16);
    BigReal out = numtower::pow(m, BigReal(e, precision + 16)) / BigReal(Rational(beta - 1), precision + 16);
    BigReal up(precision);
    mpfr_set(up.get(), out.get(), MPFR_RNDU);
    return up;
}

StateValue partition_function(const Beta& beta, const TruncationPolicy& policy, long precision) {
    const Rational& b = require_low(beta);
    const long work = guard_precision(precision, policy.max_terms);
    BigReal sum(work);
    BigReal w(work);
    const InversePower power(b, work);
    for (long n = policy.max_terms; n >= 1; --n) {
        power(w, n);
        sum += w;
    }
    const BigReal bound = truncation_error(b, policy.max_terms, sum, work, precision);
    return {BigComplex(narrow(sum, precision)), bound, beta, "dirichlet"};
}

StateValue high_temp_state(const QmodZ& r, const Beta& beta, long precision) {
    if (beta.is_infinite() || beta.value() > 1)
        throw Error(ErrorKind::DomainError, "the high-temperature formula needs 0 < beta <= 1");
    const i64 b = r.den();
    if (b == 1) return {Cyclotomic(Rational(1)), BigReal(precision), beta, "exact"};
    if (beta.value() == 1) return {Cyclotomic(Rational(0)), BigReal(precision), beta, "exact"};

    const long work = precision + 32;
    const BigReal s(beta.value(), work);
    const BigReal one(1L, work);
    BigReal v = numtower::pow(BigReal(b, work), -s);
    for (i64 p : numtower::prime_divisors(b)) {
        const BigReal bp(p, work);
        v *= (one - numtower::pow(bp, s - one)) / (one - one / bp);
    }
    return {BigComplex(narrow(v, precision)), numtower::working_tolerance(precision), beta, "product"};
}

std::vector<Bounded> low_temp_weights(i64 b, const Beta& beta, long precision) {
    const Rational& s = require_low(beta);
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    const long work = precision + 32;
    const BigReal sr(s, work);
    const Bounded z = numtower::riemann_zeta(sr, work);
    const BigReal zr = z.value.re();
    const BigReal scale = numtower::pow(BigReal(b, work), -sr);
    const BigReal denom = zr - z.bound;
    std::vector<Bounded> out;
    for (i64 k = 1; k <= b; ++k) {
        const Bounded h = numtower::hurwitz_zeta(sr, numtower::make_rational(k, b), work);
        const BigReal w = scale * h.value.re() / zr;
        BigReal bound = (scale * h.bound + w * z.bound) / denom;
        bound += numtower::working_tolerance(precision);
        out.push_back({BigComplex(narrow(w, precision)), narrow(bound, precision)});
    }
    return out;
}

LowTempPaths low_temp_paths(const QmodZ& r, const Beta& beta, i64 u, const TruncationPolicy& policy,
                            long precision) {
    const Rational& s = require_low(beta);
    const i64 b = r.den();
    require_unit(u, b);
    const long terms = policy.max_terms;
    const long work = guard_precision(precision, terms);

    const auto sums = class_sums(b, terms, work, InversePower(s, work));
    StateValue direct = truncated_value(ratio(sums, r, u, work), beta, terms, work, precision, "dirichlet");

    const auto weights = low_temp_weights(b, beta, precision);
    BigComplex v(precision);
    BigReal bound(precision);
    for (i64 k = 1; k <= b; ++k) {
        const auto& w = weights[static_cast<std::size_t>(k - 1)];
        v += BigComplex::unit_root(Rational(mulmod(mulmod(u, r.num(), b), k, b), b), precision) * w.value.re();
        bound += w.bound;
    }
    return {std::move(direct), StateValue{v, bound, beta, "hurwitz"}};
}

StateValue low_temp_state(const QmodZ& r, const Beta& beta, i64 u, const TruncationPolicy& policy, long precision) {
    require_low(beta);
    require_unit(u, r.den());
    if (r.is_zero()) return {Cyclotomic(Rational(1)), BigReal(precision), beta, "exact"};
    LowTempPaths paths = low_temp_paths(r, beta, u, policy, precision);
    const BigReal gap = (paths.direct.numeric(precision) - paths.hurwitz.numeric(precision)).abs();
    if (gap > paths.direct.error_bound + paths.hurwitz.error_bound)
        throw Error(ErrorKind::Inconsistent, "direct and Hurwitz evaluations differ by " + gap.str(6));
    return std::move(paths.hurwitz);
}

Cyclotomic ground_state(const QmodZ& r, i64 u) {
    require_unit(u, r.den());
    return Cyclotomic::root(r.den(), mulmod(numtower::mod(u, r.den()), r.num(), r.den()));
}

StateValue truncated_bc_gibbs(const QmodZ& r, const Beta& beta, i64 u, long terms, long precision) {
    const Rational& s = require_low(beta);
    require_unit(u, r.den());
    if (terms < 1) throw Error(ErrorKind::InvalidArgument, "truncation needs at least one term");
    const long work = guard_precision(precision, terms);
    const BigReal sr(s, work);
    const auto sums = class_sums(r.den(), terms, work, [&](BigReal& w, long n) {
        mpfr_log_ui(w.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_mul(w.get(), w.get(), sr.get(), MPFR_RNDN);
        mpfr_neg(w.get(), w.get(), MPFR_RNDN);
        mpfr_exp(w.get(), w.get(), MPFR_RNDN);
    });
    return truncated_value(ratio(sums, r, u, work), beta, terms, work, precision, "truncated-gibbs");
}

}  // namespace bcsys::kms
