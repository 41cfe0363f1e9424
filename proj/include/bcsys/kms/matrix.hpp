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

#include <vector>

#include "bcsys/numtower/bigfloat.hpp"
#include "bcsys/rng.hpp"

namespace bcsys::kms {

using numtower::BigComplex;
using numtower::BigReal;

/// Dense square matrix of arbitrary-precision complex numbers.
class CMatrix {
public:
    CMatrix(std::size_t dim, long precision);
    static CMatrix identity(std::size_t dim, long precision);
    static CMatrix diagonal(const std::vector<BigComplex>& d);
    /// E_ij.
    static CMatrix unit(std::size_t dim, std::size_t i, std::size_t j, long precision);

    std::size_t dim() const { return n_; }
    long precision() const { return precision_; }
    BigComplex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigComplex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    CMatrix adjoint() const;
    BigComplex trace() const;
    BigReal frobenius() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(const BigComplex& c);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const BigComplex& c) { return a *= c; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

private:
    std::size_t n_;
    long precision_;
    std::vector<BigComplex> a_;
};

/// H = V diag(values) V*.
struct Eigensystem {
    std::vector<BigReal> values;
    CMatrix vectors;
    /// Frobenius norm of what was left off the diagonal.
    BigReal residual;
};

/// Cyclic complex Jacobi. Throws InvalidArgument if H is not Hermitian to 2^{-(p-8)}·‖H‖.
Eigensystem hermitian_eigensystem(const CMatrix& h);

/// f(H) through the spectrum.
template <typename F>
CMatrix spectral_function(const Eigensystem& e, F f) {
    const std::size_t n = e.values.size();
    std::vector<BigComplex> d;
    d.reserve(n);
    for (const auto& v : e.values) d.push_back(f(v));
    return e.vectors * CMatrix::diagonal(d) * e.vectors.adjoint();
}

/// Entries with real and imaginary parts uniform in [−1, 1).
CMatrix random_matrix(Rng& rng, std::size_t dim, long precision);
CMatrix random_hermitian(Rng& rng, std::size_t dim, long precision);

}  // namespace bcsys::kms
