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

#include <compare>
#include <string>
#include <vector>

#include "bcsys/numtower/qmodz.hpp"

namespace bcsys::numtower {

/// A level-N truncation of ρ ∈ Hom(Q/Z, Q/Z) ≅ Ẑ: the residue of ρ mod N.
class ResidueEndo {
public:
    ResidueEndo() = default;
    ResidueEndo(i64 level, i64 residue);

    i64 level() const { return level_; }
    i64 residue() const { return residue_; }

    /// ρ(r); throws LevelMismatch unless den(r) | level.
    QmodZ apply(const QmodZ& r) const;

    /// Canonical projection to a level dividing this one.
    ResidueEndo lower(i64 new_level) const;
    /// The canonical refinement (same residue) at a multiple of the level.
    ResidueEndo raise(i64 new_level) const;
    /// Every residue at new_level that projects onto this one.
    std::vector<ResidueEndo> refinements(i64 new_level) const;

    ResidueEndo scaled(i64 k) const { return {level_, mulmod(residue_, k, level_)}; }
    /// q | level and ρ ≡ 0 mod q.
    bool divisible_by(i64 q) const { return level_ % q == 0 && residue_ % q == 0; }

    friend bool operator==(const ResidueEndo&, const ResidueEndo&) = default;
    friend auto operator<=>(const ResidueEndo&, const ResidueEndo&) = default;

    std::string str() const;

private:
    i64 level_ = 1;
    i64 residue_ = 0;
};

inline QmodZ residue_apply(const ResidueEndo& rho, const QmodZ& r) { return rho.apply(r); }

}  // namespace bcsys::numtower
