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

#include <mpfr.h>

#include <compare>
#include <string>

#include "bcsys/numtower/rational.hpp"

namespace bcsys::numtower {

inline constexpr long kDefaultPrecision = 128;

/// Owning handle on an mpfr_t. Results of binary operations carry the larger precision.
class BigReal {
public:
    explicit BigReal(long precision = kDefaultPrecision);
    BigReal(long value, long precision);
    BigReal(double value, long precision);
    BigReal(const Rational& value, long precision);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal pi(long precision);
    /// Parses a decimal string; "inf" is accepted.
    static BigReal parse(const std::string& text, long precision);

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Scientific notation with the given number of significant digits.
    std::string str(int digits = 20) const;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

private:
    void widen(long precision);
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
/// 2^e at the given precision.
BigReal exp2i(long e, long precision);

class BigComplex {
public:
    explicit BigComplex(long precision = kDefaultPrecision) : re_(precision), im_(precision) {}
    BigComplex(BigReal re, BigReal im);
    explicit BigComplex(BigReal re);

    /// exp(2πi·q).
    static BigComplex unit_root(const Rational& q, long precision);
    /// exp(iθ).
    static BigComplex polar(const BigReal& theta);

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    long precision() const { return std::max(re_.precision(), im_.precision()); }

    BigComplex conj() const { return {re_, -im_}; }
    BigReal norm() const { return re_ * re_ + im_ * im_; }
    BigReal abs() const { return sqrt(norm()); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& o);
    BigComplex& operator/=(const BigComplex& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
    friend BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    std::string str(int digits = 20) const;

private:
    BigReal re_;
    BigReal im_;
};

BigComplex exp(const BigComplex& z);

/// A value with an absolute error bound: |true − value| ≤ bound.
struct Bounded {
    BigComplex value;
    BigReal bound;
};

/// 2^{-(precision-8)}: the working tolerance for identities evaluated at this precision.
BigReal working_tolerance(long precision);

}  // namespace bcsys::numtower
