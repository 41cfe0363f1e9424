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

#include <string>
#include <vector>

#include "bcsys/bcalg/algebra.hpp"

namespace bcsys::bcalg {

/// What to do when a right-hand side needs a finer level than the one requested.
enum class LevelPolicy { strict, raise };

struct RelationOptions {
    LevelPolicy policy = LevelPolicy::raise;
    /// Negative control: every μ_n on the left-hand sides is replaced by 2μ_n.
    bool corrupt_generator = false;
};

struct RelationRow {
    std::string relation;
    std::string instance;
    bool pass;
    std::string witness;
};

/// Checks, in exact mode:
///   a  μ_n*μ_n = 1 and μ_nμ_n* = (1/n)Σ_{ns=0} e(s)
///   b  μ_mμ_n = μ_nμ_m = μ_{mn}
///   c  e(0) = 1, e(r)e(s) = e(r+s), e(r)* = e(−r)
///   d  μ_n e(r) μ_n* = (1/n)Σ_{ns=r} e(s)
std::vector<RelationRow> check_relations(i64 level, const std::vector<i64>& ns, const std::vector<QmodZ>& rs,
                                         const RelationOptions& options = {});

bool all_pass(const std::vector<RelationRow>& rows);

void to_json(numtower::Json& j, const RelationRow& row);

}  // namespace bcsys::bcalg
