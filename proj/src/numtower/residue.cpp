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

#include "bcsys/numtower/residue.hpp"

namespace bcsys::numtower {

ResidueEndo::ResidueEndo(i64 level, i64 residue) : level_(level) {
    if (level <= 0) throw Error(ErrorKind::InvalidArgument, "level must be positive");
    residue_ = mod(residue, level);
}

QmodZ ResidueEndo::apply(const QmodZ& r) const {
    if (level_ % r.den() != 0)
        throw Error(ErrorKind::LevelMismatch,
                    "denominator " + std::to_string(r.den()) + " does not divide level " + std::to_string(level_));
    return {mulmod(mulmod(residue_, r.num(), level_), level_ / r.den(), level_), level_};
}

ResidueEndo ResidueEndo::lower(i64 new_level) const {
    if (new_level <= 0 || level_ % new_level != 0)
        throw Error(ErrorKind::LevelMismatch, "cannot lower level " + std::to_string(level_) + " to " +
                                                  std::to_string(new_level));
    return {new_level, residue_ % new_level};
}

ResidueEndo ResidueEndo::raise(i64 new_level) const {
    if (new_level <= 0 || new_level % level_ != 0)
        throw Error(ErrorKind::LevelMismatch, "cannot raise level " + std::to_string(level_) + " to " +
                                                  std::to_string(new_level));
    return {new_level, residue_};
}

std::vector<ResidueEndo> ResidueEndo::refinements(i64 new_level) const {
    const ResidueEndo base = raise(new_level);
    std::vector<ResidueEndo> out;
    for (i64 k = 0; k < new_level / level_; ++k) out.emplace_back(new_level, base.residue_ + k * level_);
    return out;
}

std::string ResidueEndo::str() const { return std::to_string(residue_) + " mod " + std::to_string(level_); }

}  // namespace bcsys::numtower
