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

#include "bcsys/kms/matrix.hpp"

#include <algorithm>

#include "bcsys/error.hpp"

namespace bcsys::kms {

using numtower::exp2i;
using numtower::Rational;

CMatrix::CMatrix(std::size_t dim, long precision)
    : n_(dim), precision_(precision), a_(dim * dim, BigComplex(precision)) {
    if (dim == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be positive");
}

CMatrix CMatrix::identity(std::size_t dim, long precision) {
    CMatrix m(dim, precision);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = BigComplex(BigReal(1L, precision));
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<BigComplex>& d) {
    CMatrix m(d.size(), d.front().precision());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::unit(std::size_t dim, std::size_t i, std::size_t j, long precision) {
    CMatrix m(dim, precision);
    m(i, j) = BigComplex(BigReal(1L, precision));
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_, precision_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

BigComplex CMatrix::trace() const {
    BigComplex t(precision_);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

BigReal CMatrix::frobenius() const {
    BigReal s(precision_);
    for (const auto& z : a_) s += z.norm();
    return numtower::sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (o.n_ != n_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (o.n_ != n_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(const BigComplex& c) {
    for (auto& z : a_) z *= c;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
    CMatrix m(a.n_, std::max(a.precision_, b.precision_));
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const BigComplex& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

namespace {

BigReal off_diagonal(const CMatrix& a) {
    BigReal s(a.precision());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += a(i, j).norm();
    return numtower::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const CMatrix& h) {
    const std::size_t n = h.dim();
    const long out_precision = h.precision();
    const long work = out_precision + 32;
    const BigReal scale = h.frobenius();
    if ((h - h.adjoint()).frobenius() > numtower::working_tolerance(out_precision) * max(scale, BigReal(1L, work)))
        throw Error(ErrorKind::InvalidArgument, "matrix is not Hermitian");

    CMatrix a(n, work);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigReal re(work), im(work);
            mpfr_set(re.get(), h(i, j).re().get(), MPFR_RNDN);
            mpfr_set(im.get(), h(i, j).im().get(), MPFR_RNDN);
            a(i, j) = BigComplex(std::move(re), std::move(im));
        }
    // Symmetrize so that the iteration starts exactly Hermitian.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = BigComplex(a(i, i).re());
        for (std::size_t j = i + 1; j < n; ++j) {
            const BigComplex avg = (a(i, j) + a(j, i).conj()) * BigReal(Rational(1, 2), work);
            a(i, j) = avg;
            a(j, i) = avg.conj();
        }
    }
    CMatrix v = CMatrix::identity(n, work);
    const BigReal target = exp2i(-work + 4, work) * max(scale, BigReal(1L, work));
    const BigReal one(1L, work);

    for (int sweep = 0; sweep < 100 && off_diagonal(a) > target; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const BigComplex hpq = a(p, q);
                const BigReal b = hpq.abs();
                if (b <= exp2i(-work - 8, work) * max(scale, one)) continue;
                // D = diag(1, w) makes the block real; w = e^{−iφ} with h = b e^{iφ}.
                const BigComplex w = BigComplex(hpq.re() / b, -(hpq.im() / b));
                const BigReal theta = (a(q, q).re() - a(p, p).re()) / (BigReal(2L, work) * b);
                BigReal t = one / (numtower::abs(theta) + numtower::sqrt(theta * theta + one));
                if (theta.sign() < 0) t = -t;
                const BigReal c = one / numtower::sqrt(t * t + one);
                const BigReal s = t * c;
                // G = D·R with R = (c s; −s c).
                const BigComplex gpp = BigComplex(c), gpq = BigComplex(s);
                const BigComplex gqp = w * (-s), gqq = w * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const BigComplex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                    const BigComplex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const BigComplex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = gpp.conj() * apk + gqp.conj() * aqk;
                    a(q, k) = gpq.conj() * apk + gqq.conj() * aqk;
                }
                a(p, q) = BigComplex(work);
                a(q, p) = BigComplex(work);
                a(p, p) = BigComplex(a(p, p).re());
                a(q, q) = BigComplex(a(q, q).re());
            }
    }

    Eigensystem out{{}, CMatrix(n, out_precision), off_diagonal(a)};
    for (std::size_t i = 0; i < n; ++i) {
        BigReal lambda(out_precision);
        mpfr_set(lambda.get(), a(i, i).re().get(), MPFR_RNDN);
        out.values.push_back(std::move(lambda));
        for (std::size_t k = 0; k < n; ++k) {
            BigReal re(out_precision), im(out_precision);
            mpfr_set(re.get(), v(k, i).re().get(), MPFR_RNDN);
            mpfr_set(im.get(), v(k, i).im().get(), MPFR_RNDN);
            out.vectors(k, i) = BigComplex(std::move(re), std::move(im));
        }
    }
    return out;
}

CMatrix random_matrix(Rng& rng, std::size_t dim, long precision) {
    CMatrix m(dim, precision);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = BigComplex(BigReal(rng.real(-1, 1), precision), BigReal(rng.real(-1, 1), precision));
    return m;
}

CMatrix random_hermitian(Rng& rng, std::size_t dim, long precision) {
    const CMatrix m = random_matrix(rng, dim, precision);
    CMatrix h = m + m.adjoint();
    h *= BigComplex(BigReal(0.5, precision));
    return h;
}

}  // namespace bcsys::kms
