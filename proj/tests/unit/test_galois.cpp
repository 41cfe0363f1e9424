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

#include <gtest/gtest.h>

#include "bcsys/error.hpp"
#include "bcsys/galois/galois.hpp"
#include "../support/generators.hpp"

namespace {

using namespace bcsys;
using namespace bcsys::galois;
using numtower::BigReal;
using numtower::Rational;

TEST(GaloisApply, Examples) {
    const Cyclotomic z4 = Cyclotomic::root(4, 1);
    EXPECT_EQ(galois_apply(GaloisElement(4, 1), z4), z4);
    EXPECT_EQ(galois_apply(GaloisElement(4, 3), z4), Cyclotomic::root(4, 3));
    EXPECT_EQ(galois_apply(GaloisElement(4, 3), z4), z4.conj());
    const Cyclotomic z5 = Cyclotomic::root(5, 1);
    EXPECT_EQ(galois_apply(GaloisElement(5, 2), galois_apply(GaloisElement(5, 3), z5)), z5);
    EXPECT_EQ(galois_apply(GaloisElement(5, 2) * GaloisElement(5, 3), z5), z5);
}

TEST(GaloisApply, SmallerConductorIsRaised) {
    // ζ_3 = ζ_12^4; u = 5 ≡ 2 mod 3.
    EXPECT_EQ(GaloisElement(12, 5).apply(Cyclotomic::root(3, 1)), Cyclotomic::root(3, 2));
    // The least lift of 2 mod 3 to (Z/12)^* is 5, which fixes ζ_4.
    const Cyclotomic moved = GaloisElement(3, 2).apply(Cyclotomic::root(4, 1));
    EXPECT_EQ(moved, Cyclotomic::root(4, 1));
}

TEST(GaloisApply, RingHomomorphism) {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const i64 b = rng.uniform(1, 24);
        const i64 u = gen::random_coprime(rng, 1, b, b);
        const GaloisElement g(b, u);
        const auto divs = numtower::divisors(b);
        const Cyclotomic x = gen::random_cyclotomic(rng, gen::pick(rng, divs));
        const Cyclotomic y = gen::random_cyclotomic(rng, gen::pick(rng, divs));
        EXPECT_EQ(g.apply(x + y), g.apply(x) + g.apply(y));
        EXPECT_EQ(g.apply(x * y), g.apply(x) * g.apply(y));
        EXPECT_EQ(g.apply(Cyclotomic(Rational(3, 7))), Cyclotomic(Rational(3, 7)));
    }
}

TEST(GaloisApply, GroupAction) {
    for (i64 b = 1; b <= 24; ++b) {
        const Cyclotomic z = Cyclotomic::root(b, 1) + Cyclotomic::root(b, b > 2 ? 2 : 0) * Rational(1, 3);
        for (i64 u = 1; u <= b; ++u) {
            if (numtower::gcd(u, b) != 1) continue;
            const GaloisElement g(b, u);
            EXPECT_EQ(g.inverse().apply(g.apply(z)), z);
            for (i64 v = 1; v <= b; ++v) {
                if (numtower::gcd(v, b) != 1) continue;
                const GaloisElement h(b, v);
                EXPECT_EQ(g.apply(h.apply(z)), (g * h).apply(z)) << b << " " << u << " " << v;
            }
        }
    }
}

TEST(GaloisElementType, Errors) {
    EXPECT_THROW(GaloisElement(6, 3), Error);
    try {
        GaloisElement(6, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonInvertible);
    }
    try {
        GaloisElement(5, 2) * GaloisElement(7, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LevelMismatch);
    }
}

TEST(Theta, Examples) {
    EXPECT_EQ(theta_on_generator(GaloisElement(7, 1), QmodZ(3, 7)), QmodZ(3, 7));
    EXPECT_EQ(theta_on_generator(GaloisElement(5, 2), QmodZ(1, 5)), QmodZ(2, 5));
    EXPECT_EQ(theta_on_generator(GaloisElement(4, 3), QmodZ(1, 4)), QmodZ(3, 4));
    EXPECT_EQ(theta_on_generator(GaloisElement(12, 5), QmodZ(1, 4)), QmodZ(1, 4));
    try {
        theta_on_generator(GaloisElement(5, 2), QmodZ(1, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LevelMismatch);
    }
}

TEST(Intertwining, ExactAtZeroTemperature) {
    for (i64 b = 1; b <= 24; ++b)
        for (i64 u = 1; u <= b; ++u) {
            if (numtower::gcd(u, b) != 1) continue;
            const auto rows = intertwining_check(b, kms::Beta::infinity(), u, 1);
            EXPECT_EQ(static_cast<i64>(rows.size()), b == 1 ? 1 : numtower::euler_phi(b) + 1);
            for (const auto& row : rows) {
                EXPECT_TRUE(row.pass) << b << " " << u << " " << row.a;
                EXPECT_TRUE(row.lhs.is_exact());
                EXPECT_TRUE(row.bound.is_zero());
            }
        }
}

TEST(Intertwining, FiniteTemperature) {
    const kms::TruncationPolicy policy{2000};
    for (i64 u = 1; u < 5; ++u)
        for (const auto& row : intertwining_check(5, kms::Beta(3), u, 1, policy)) {
            EXPECT_TRUE(row.pass) << u << " " << row.a;
            EXPECT_LT(row.bound.to_double(), 1e-8);
        }
    for (const auto& row : intertwining_check(8, kms::Beta(Rational(5, 2)), 1, 3, policy)) EXPECT_TRUE(row.pass);
}

TEST(Intertwining, IdentityThetaWouldFail) {
    const GaloisElement g(5, 2);
    const Cyclotomic lhs = g.apply(kms::ground_state(QmodZ(1, 5), 1));
    EXPECT_NE(lhs, kms::ground_state(QmodZ(1, 5), 1));
}

TEST(Intertwining, Json) {
    const auto rows = intertwining_check(4, kms::Beta::infinity(), 3, 1);
    numtower::Json j = rows.at(1);
    EXPECT_EQ(j["b"], 4);
    EXPECT_EQ(j["beta"], "inf");
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["lhs"], j["rhs"]);
}

}  // namespace
