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

#include "bcsys/kms/state.hpp"
#include "bcsys/numtower/qmodz.hpp"

namespace bcsys::kms {

using numtower::i64;
using numtower::QmodZ;

/// Σ_{n≤M} n^{−β} with the integral tail bound. DomainError unless β > 1.
StateValue partition_function(const Beta& beta, const TruncationPolicy& policy,
                              long precision = numtower::kDefaultPrecision);

/// M^{1−β}/(β−1), the bound on Σ_{n>M} n^{−β}.
BigReal integral_tail_bound(const Rational& beta, long terms, long precision);

/// The unique state for 0 < β ≤ 1 on e(a/b): b^{−β} ∏_{p|b} (1 − p^{β−1})/(1 − p^{−1}).
StateValue high_temp_state(const QmodZ& r, const Beta& beta, long precision = numtower::kDefaultPrecision);

/// Normalized weights w_k = b^{−β} ζ(β, k/b)/ζ(β), k = 1..b, each with its own bound.
/// They are the probabilities that n ≡ k mod b under n ↦ n^{−β}/ζ(β).
std::vector<numtower::Bounded> low_temp_weights(i64 b, const Beta& beta, long precision = numtower::kDefaultPrecision);

/// Both evaluations of the extremal low-temperature state.
struct LowTempPaths {
    StateValue direct;
    StateValue hurwitz;
};

/// Throws DomainError unless β > 1, NonInvertible unless gcd(u, b) = 1.
LowTempPaths low_temp_paths(const QmodZ& r, const Beta& beta, i64 u, const TruncationPolicy& policy,
                            long precision = numtower::kDefaultPrecision);

/// ζ(β)^{−1} Σ n^{−β} ι_u(ζ_b^{an}). Both paths are computed; Inconsistent is thrown if they
/// disagree beyond their combined bounds. The Hurwitz value is returned.
StateValue low_temp_state(const QmodZ& r, const Beta& beta, i64 u, const TruncationPolicy& policy,
                          long precision = numtower::kDefaultPrecision);

/// ζ_b^{ua}, the β → ∞ limit.
Cyclotomic ground_state(const QmodZ& r, i64 u);

/// Tr(e^{−βH} e(a/b))/Tr(e^{−βH}) on span{ε_1, …, ε_M} with Hε_n = log(n) ε_n.
/// The bound is against the untruncated state.
StateValue truncated_bc_gibbs(const QmodZ& r, const Beta& beta, i64 u, long terms,
                              long precision = numtower::kDefaultPrecision);

}  // namespace bcsys::kms
