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

#include "bcsys/numtower/hurwitz.hpp"

#include <mutex>

namespace bcsys::numtower {

namespace {

// a_m = B_m / m!, from Σ_{j=0}^{m} a_j / (m+1−j)! = 0.
std::vector<Rational> scaled_bernoulli(int count) {
    static std::mutex mutex;
    static std::vector<Rational> a{Rational(1)};
    static std::vector<Rational> inv_fact{Rational(1)};
    std::lock_guard lock(mutex);
    while (static_cast<int>(a.size()) < count) {
        const int m = static_cast<int>(a.size());
        while (static_cast<int>(inv_fact.size()) <= m + 1)
            inv_fact.push_back(inv_fact.back() / static_cast<long>(inv_fact.size()));
        Rational sum(0);
        for (int j = 0; j < m; ++j) sum += a[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(m + 1 - j)];
        a.push_back(-sum);
    }
    return {a.begin(), a.begin() + count};
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int count) {
    const std::vector<Rational> a = scaled_bernoulli(count);
    std::vector<Rational> out;
    Integer fact = 1;
    for (int m = 0; m < count; ++m) {
        if (m > 0) fact *= m;
        out.push_back(a[static_cast<std::size_t>(m)] * Rational(fact));
    }
    return out;
}

Bounded hurwitz_zeta(const BigReal& s, const Rational& a, long precision) {
    if (s.is_inf() || !(s > BigReal(1L, s.precision())))
        throw Error(ErrorKind::DomainError, "Hurwitz zeta requires s > 1");
    if (a <= 0) throw Error(ErrorKind::DomainError, "Hurwitz zeta requires a > 0");

    const long work = precision + 32;
    const BigReal sw = [&] {
        BigReal t(work);
        mpfr_set(t.get(), s.get(), MPFR_RNDN);
        return t;
    }();
    const BigReal one(1L, work);
    const BigReal aw(a, work);
    const long shift = 20 + precision / 2;

    BigReal sum(work);
    for (long n = 0; n < shift; ++n) sum += pow(BigReal(n, work) + aw, -sw);

    const BigReal x = BigReal(shift, work) + aw;
    BigReal tail = pow(x, one - sw) / (sw - one);
    tail += pow(x, -sw) / BigReal(2L, work);

    const BigReal target = exp2i(-(precision + 8), work);
    const int max_terms = static_cast<int>(precision) + 64;
    const std::vector<Rational> b = scaled_bernoulli(2 * max_terms + 2);

    BigReal poch = sw;                                // (s)_{2k−1}
    BigReal power = pow(x, -(sw + one));              // x^{−s−2k+1}
    const BigReal inv_x2 = one / (x * x);
    BigReal bound(work);
    for (int k = 1;; ++k) {
        const BigReal term = BigReal(b[static_cast<std::size_t>(2 * k)], work) * poch * power;
        if (abs(term) < target * abs(sum) || k == max_terms) {
            bound = abs(term);
            break;
        }
        tail += term;
        poch *= (sw + BigReal(static_cast<long>(2 * k - 1), work)) * (sw + BigReal(static_cast<long>(2 * k), work));
        power *= inv_x2;
    }

    BigReal value = sum + tail;
    // Rounding: each of the ~shift + k operations loses at most one ulp of the working precision.
    bound += BigReal(static_cast<long>(shift + max_terms), work) * exp2i(-work, work) * abs(value);
    bound += exp2i(-precision, work) * abs(value);

    BigReal rounded(precision);
    mpfr_set(rounded.get(), value.get(), MPFR_RNDN);
    BigReal out_bound(precision);
    mpfr_set(out_bound.get(), bound.get(), MPFR_RNDU);
    return {BigComplex(std::move(rounded)), std::move(out_bound)};
}

}  // namespace bcsys::numtower
