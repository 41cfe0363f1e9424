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

#include "bcsys/kms/matrix.hpp"
#include "bcsys/kms/state.hpp"

namespace bcsys::kms {

/// A matrix algebra M_dim(C) with σ_t(x) = e^{itH} x e^{−itH}.
/// The spectral decomposition of H is computed once, on construction.
class FiniteDynSystem {
public:
    explicit FiniteDynSystem(CMatrix h);

    std::size_t dim() const { return h_.dim(); }
    long precision() const { return h_.precision(); }
    const CMatrix& hamiltonian() const { return h_; }
    const Eigensystem& spectrum() const { return eig_; }
    /// ‖V diag(λ) V* − H‖_F, the accuracy every exponential inherits.
    const BigReal& decomposition_error() const { return decomposition_error_; }

    /// σ_t(x).
    CMatrix evolve(const CMatrix& x, const BigReal& t) const;
    /// σ_{iβ}(y) = e^{−βH} y e^{βH}.
    CMatrix imaginary_evolve(const CMatrix& y, const BigReal& beta) const;
    /// e^{−β(H − λ_min)}: the Boltzmann weight up to a scalar, which every ratio ignores.
    CMatrix boltzmann(const BigReal& beta) const;

private:
    CMatrix h_;
    Eigensystem eig_;
    BigReal decomposition_error_;
};

/// x ↦ Tr(ρx) for a density matrix ρ.
class DensityState {
public:
    /// ρ/Tr(ρ). Throws DegenerateInput when the trace vanishes.
    explicit DensityState(CMatrix rho);
    static DensityState gibbs(const FiniteDynSystem& sys, const BigReal& beta);

    const CMatrix& density() const { return rho_; }
    BigComplex operator()(const CMatrix& x) const;

private:
    CMatrix rho_;
};

StateValue gibbs_state(const FiniteDynSystem& sys, const Beta& beta, const CMatrix& x);

/// |φ(x σ_{iβ}(y)) − φ(yx)| for an arbitrary state φ.
BigReal kms_residual(const DensityState& phi, const FiniteDynSystem& sys, const Beta& beta, const CMatrix& x,
                     const CMatrix& y);
/// The same residual for the Gibbs state at β.
BigReal kms_boundary_check(const FiniteDynSystem& sys, const Beta& beta, const CMatrix& x, const CMatrix& y);

/// Tr(e^{−βH}).
StateValue partition_function(const FiniteDynSystem& sys, const Beta& beta);

}  // namespace bcsys::kms
