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

#include "bcsys/numtower/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace bcsys::numtower {

namespace {

void check_precision(long precision) {
    if (precision < MPFR_PREC_MIN || precision > 1 << 20)
        throw Error(ErrorKind::InvalidArgument, "precision out of range: " + std::to_string(precision));
}

}  // namespace

BigReal::BigReal(long precision) {
    check_precision(precision);
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, long precision) : BigReal(precision) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigReal::BigReal(double value, long precision) : BigReal(precision) { mpfr_set_d(v_, value, MPFR_RNDN); }

BigReal::BigReal(const Rational& value, long precision) : BigReal(precision) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi(long precision) {
    BigReal out(precision);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::parse(const std::string& text, long precision) {
    BigReal out(precision);
    if (text == "inf" || text == "+inf" || text == "infinity") {
        mpfr_set_inf(out.v_, 1);
        return out;
    }
    char* end = nullptr;
    mpfr_strtofr(out.v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (end == text.c_str() || *end != '\0') throw Error(ErrorKind::InvalidArgument, "not a real number: '" + text + "'");
    return out;
}

std::string BigReal::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

void BigReal::widen(long precision) {
    if (precision > this->precision()) mpfr_prec_round(v_, precision, MPFR_RNDN);
}

BigReal BigReal::operator-() const {
    BigReal out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    widen(o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    widen(o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    widen(o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    widen(o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

namespace {

template <typename F>
BigReal unary(const BigReal& x, F f) {
    BigReal out(x.precision());
    f(out.get(), x.get(), MPFR_RNDN);
    return out;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw Error(ErrorKind::DomainError, "square root of a negative number");
    return unary(x, mpfr_sqrt);
}
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "logarithm of a non-positive number");
    return unary(x, mpfr_log);
}
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal out(std::max(x.precision(), y.precision()));
    mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal exp2i(long e, long precision) {
    BigReal out(1L, precision);
    mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
    return out;
}

BigReal working_tolerance(long precision) { return exp2i(-(precision - 8), precision); }

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}

BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(re_.precision()) {}

BigComplex BigComplex::unit_root(const Rational& q, long precision) {
    // Reduce to [0,1) exactly before scaling by 2π.
    Rational frac = q - Rational(Integer(q.get_num() / q.get_den()));
    if (frac < 0) frac += 1;
    if (frac == 0) return BigComplex(BigReal(1L, precision));
    if (frac * 4 == 1) return {BigReal(precision), BigReal(1L, precision)};
    if (frac * 2 == 1) return BigComplex(BigReal(-1L, precision));
    if (frac * 4 == 3) return {BigReal(precision), BigReal(-1L, precision)};
    const long work = precision + 16;
    BigReal theta = BigReal::pi(work) * BigReal(Rational(2 * frac), work);
    BigReal c(precision), s(precision);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

BigComplex BigComplex::polar(const BigReal& theta) {
    BigReal c(theta.precision()), s(theta.precision());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal re = re_ * o.re_ - im_ * o.im_;
    BigReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    const BigReal d = o.norm();
    if (d.is_zero()) throw Error(ErrorKind::DomainError, "complex division by zero");
    BigReal re = (re_ * o.re_ + im_ * o.im_) / d;
    BigReal im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string BigComplex::str(int digits) const { return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + numtower::abs(im_).str(digits) + "i"; }

BigComplex exp(const BigComplex& z) { return BigComplex::polar(z.im()) * exp(z.re()); }

}  // namespace bcsys::numtower
