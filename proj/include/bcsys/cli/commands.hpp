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

#include <cstddef>
#include <string>
#include <vector>

#include "bcsys/cli/report.hpp"
#include "bcsys/kms/state.hpp"
#include "bcsys/numtower/qmodz.hpp"

namespace bcsys::cli {

using numtower::i64;
using numtower::QmodZ;

/// Relations a–d for every n | N and r ∈ (1/N)Z/Z, exact. The hidden hook doubles μ_n.
Report cmd_bc_relations(const RunConfig& config, bool corrupt_generator = false);

/// One row per (β, a/b): high temperature for β ≤ 1, low for β > 1, ground state at ∞.
/// Domain errors land in the row; the report fails only if a row errored.
Report cmd_kms_eval(const RunConfig& config, const std::vector<kms::Beta>& betas, const std::vector<QmodZ>& elements,
                    i64 iota);

/// "a/b", or "upto:B" for every reduced a/b with 2 ≤ b ≤ B.
std::vector<QmodZ> parse_elements(const std::vector<std::string>& specs);

/// Exact zeros at β = 1 for 2 ≤ b ≤ max_b, and φ_{1/2}(e(1/2)) = √2 − 1 to 1e−12.
Report cmd_high_temp_check(const RunConfig& config, i64 max_b);

/// Direct, Hurwitz and truncated-trace evaluations of φ(e(1/b)) for every unit ι-exponent,
/// checked pairwise against the summed bounds; the summed bound must stay ≤ 3e−5 and b = 2 must give −1/2.
Report cmd_low_temp_check(const RunConfig& config, const kms::Beta& beta, const std::vector<i64>& conductors);

/// Z(β) truncated at --trunc against the Hurwitz evaluation of ζ(β, 1) (and π²/6 at β = 2).
Report cmd_partition(const RunConfig& config, const kms::Beta& beta);

/// γ_u(φ(x)) = φ(θ(γ_u)x) for every u ∈ (Z/b)^*.
Report cmd_galois_verify(const RunConfig& config, const std::vector<i64>& conductors, const std::vector<kms::Beta>& betas,
                         i64 iota);

/// A seeded dim×dim Hamiltonian: KMS boundary and σ_t-invariance residuals of the Gibbs state,
/// or of the normalized trace when non_gibbs is set (a negative control that should fail).
Report cmd_gibbs_check(const RunConfig& config, std::size_t dim, const std::vector<kms::Beta>& betas, int pairs,
                       bool non_gibbs = false);

/// Reflexivity, symmetry with swapped witnesses, transitivity on constructed chains, witness
/// validation and JSON round trips, at the configured level.
Report cmd_commensurability_check(const RunConfig& config, int samples);

/// Associativity, source/target laws and η on seeded composable triples.
Report cmd_groupoid_check(const RunConfig& config, int samples);

/// Γ∘β_n = α_n∘Γ for 1 ≤ n, b ≤ max_b.
Report cmd_duality_check(const RunConfig& config, i64 max_b);

/// Coset tables Γ\{det n} for n ≤ max_n, counted against σ₁(n).
Report cmd_gl2_hecke(const RunConfig& config, i64 max_n);

/// Associativity, involution and σ_t laws on seeded elements at the configured level.
Report cmd_gl2_conv_check(const RunConfig& config, i64 det_bound, int trials);

/// quotient_to_h(cstar_embed(a, b)) = i on seeded samples, to 2^−120.
Report cmd_gl2_fiber_check(const RunConfig& config, int samples);

}  // namespace bcsys::cli
