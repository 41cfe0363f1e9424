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

#include "bcsys/kms/finite.hpp"

#include <algorithm>

#include "bcsys/error.hpp"

namespace bcsys::kms {

namespace {

BigReal min_eigenvalue(const Eigensystem& e) {
    return *std::min_element(e.values.begin(), e.values.end(),
                             [](const BigReal& a, const BigReal& b) { return a < b; });
}

BigReal spread(const Eigensystem& e) {
    const auto [lo, hi] = std::minmax_element(e.values.begin(), e.values.end(),
                                              [](const BigReal& a, const BigReal& b) { return a < b; });
    return *hi - *lo;
}

// Error estimate for a Gibbs expectation: the decomposition error amplified by the
// condition of the exponential, plus accumulated rounding over dim² products.
BigReal gibbs_bound(const FiniteDynSystem& sys, const BigReal& beta, const BigReal& scale) {
    const long p = sys.precision();
    const BigReal n(static_cast<long>(sys.dim()), p);
    const BigReal growth = numtower::exp(beta * spread(sys.spectrum()));
    const BigReal amplified = BigReal(2L, p) * beta * sys.decomposition_error() * growth;
    return (amplified + n * n * numtower::working_tolerance(p) * growth) * max(scale, BigReal(1L, p));
}

}  // namespace

FiniteDynSystem::FiniteDynSystem(CMatrix h)
    : h_(std::move(h)), eig_(hermitian_eigensystem(h_)), decomposition_error_(h_.precision()) {
    std::vector<BigComplex> d;
    for (const auto& v : eig_.values) d.emplace_back(v);
    const CMatrix rebuilt = eig_.vectors * CMatrix::diagonal(d) * eig_.vectors.adjoint();
    decomposition_error_ = (rebuilt - h_).frobenius();
}

CMatrix FiniteDynSystem::evolve(const CMatrix& x, const BigReal& t) const {
    const CMatrix u = spectral_function(eig_, [&](const BigReal& l) { return BigComplex::polar(t * l); });
    return u * x * u.adjoint();
}

CMatrix FiniteDynSystem::imaginary_evolve(const CMatrix& y, const BigReal& beta) const {
    const CMatrix down = spectral_function(eig_, [&](const BigReal& l) { return BigComplex(numtower::exp(-(beta * l))); });
    const CMatrix up = spectral_function(eig_, [&](const BigReal& l) { return BigComplex(numtower::exp(beta * l)); });
    return down * y * up;
}

CMatrix FiniteDynSystem::boltzmann(const BigReal& beta) const {
    const BigReal shift = min_eigenvalue(eig_);
    return spectral_function(eig_, [&](const BigReal& l) { return BigComplex(numtower::exp(-(beta * (l - shift)))); });
}

DensityState::DensityState(CMatrix rho) : rho_(std::move(rho)) {
    const BigComplex tr = rho_.trace();
    if (tr.is_zero()) throw Error(ErrorKind::DegenerateInput, "density matrix has zero trace");
    rho_ *= BigComplex(BigReal(1L, rho_.precision())) / tr;
}

DensityState DensityState::gibbs(const FiniteDynSystem& sys, const BigReal& beta) {
    return DensityState(sys.boltzmann(beta));
}

BigComplex DensityState::operator()(const CMatrix& x) const {
    if (x.dim() != rho_.dim()) throw Error(ErrorKind::InvalidArgument, "observable has the wrong dimension");
    BigComplex s(rho_.precision());
    for (std::size_t i = 0; i < rho_.dim(); ++i)
        for (std::size_t k = 0; k < rho_.dim(); ++k) s += rho_(i, k) * x(k, i);
    return s;
}

StateValue gibbs_state(const FiniteDynSystem& sys, const Beta& beta, const CMatrix& x) {
    const BigReal b = beta.real(sys.precision());
    const DensityState phi = DensityState::gibbs(sys, b);
    return {phi(x), gibbs_bound(sys, b, x.frobenius()), beta, "gibbs"};
}

BigReal kms_residual(const DensityState& phi, const FiniteDynSystem& sys, const Beta& beta, const CMatrix& x,
                     const CMatrix& y) {
    const BigReal b = beta.real(sys.precision());
    return (phi(x * sys.imaginary_evolve(y, b)) - phi(y * x)).abs();
}

BigReal kms_boundary_check(const FiniteDynSystem& sys, const Beta& beta, const CMatrix& x, const CMatrix& y) {
    return kms_residual(DensityState::gibbs(sys, beta.real(sys.precision())), sys, beta, x, y);
}

StateValue partition_function(const FiniteDynSystem& sys, const Beta& beta) {
    const long p = sys.precision();
    const BigReal b = beta.real(p);
    BigReal z(p);
    for (const auto& l : sys.spectrum().values) z += numtower::exp(-(b * l));
    const BigReal bound = gibbs_bound(sys, b, BigReal(1L, p)) * z;
    return {BigComplex(z), bound, beta, "trace"};
}

}  // namespace bcsys::kms
