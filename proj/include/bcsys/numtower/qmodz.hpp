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
#include <string_view>
#include <vector>

#include "bcsys/numtower/arith.hpp"

namespace bcsys::numtower {

/// An element a/b of Q/Z kept in canonical form: 0 <= a < b, gcd(a, b) = 1.
/// The class of 0 is 0/1.
class QmodZ {
public:
    QmodZ() = default;
    /// Any integer pair with den != 0; reduced mod 1 and canonicalized.
    QmodZ(i64 num, i64 den);

    static QmodZ zero() { return {}; }
    static QmodZ parse(std::string_view text);

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    QmodZ operator-() const { return {den_ - num_, den_}; }
    friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return a + (-b); }
    /// k·r for an integer k.
    QmodZ scaled(i64 k) const;

    friend bool operator==(const QmodZ&, const QmodZ&) = default;
    friend auto operator<=>(const QmodZ& a, const QmodZ& b) {
        if (auto c = a.den_ <=> b.den_; c != 0) return c;
        return a.num_ <=> b.num_;
    }

    std::string str() const;

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

/// Group law of Q/Z.
inline QmodZ qmodz_add(const QmodZ& a, const QmodZ& b) { return a + b; }

/// All a/b with b | level, in increasing numerator order over the common denominator.
std::vector<QmodZ> elements_of_level(i64 level);

}  // namespace bcsys::numtower
