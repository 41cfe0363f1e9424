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

#include <set>

#include "bcsys/error.hpp"
#include "bcsys/gl2/algebra.hpp"
#include "bcsys/gl2/eta2.hpp"
#include "bcsys/gl2/sampling.hpp"
#include "bcsys/gl2/upper_half.hpp"
#include "bcsys/rng.hpp"
#include "../support/gl2_oracle.hpp"

namespace bcsys::gl2 {
// Readable failure messages.
inline void PrintTo(const IntMat2& m, std::ostream* os) { *os << m.str(); }
inline void PrintTo(const Mat2Q& m, std::ostream* os) { *os << m.str(); }
inline void PrintTo(const Mat2Residue& m, std::ostream* os) { *os << m.str(); }
inline void PrintTo(const GaussQ& z, std::ostream* os) { *os << z.x.get_str() << " + " << z.y.get_str() << "i"; }
inline void PrintTo(const DoubleCoset& d, std::ostream* os) { *os << d.str(); }
inline void PrintTo(const Lattice2& l, std::ostream* os) { *os << l.basis.str() << " / " << l.labels.str(); }
}  // namespace bcsys::gl2

namespace {

using namespace bcsys;
using namespace bcsys::gl2;
using bcalg::Mode;
using numtower::Cyclotomic;

constexpr long kPrec = 128;
const i64 kHigh = sampling_level(12);

template <typename F>
ErrorKind kind_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Overflow;
}

// ---------- Hecke cosets and Hermite forms ----------

TEST(Hecke, CountsAreSigma1) {
    EXPECT_EQ(hecke_cosets(1), std::vector<Mat2Q>{Mat2Q()});
    EXPECT_EQ(hecke_cosets(4).size(), 7u);
    EXPECT_EQ(hecke_cosets(6).size(), 12u);
    for (i64 n = 1; n <= 50; ++n) {
        const auto reps = hecke_cosets(n);
        EXPECT_EQ(static_cast<i64>(reps.size()), numtower::sigma1(n)) << n;
        std::set<Mat2Q> forms;
        for (const auto& r : reps) {
            EXPECT_EQ(hermite_form(r), r);
            EXPECT_EQ(r.det(), n);
            forms.insert(hermite_form(r));
        }
        EXPECT_EQ(forms.size(), reps.size());
    }
}

TEST(Hecke, BruteForceOracle) {
    for (i64 n = 1; n <= 10; ++n) {
        const auto classes = oracle::brute_force_classes(n);
        EXPECT_EQ(classes.size(), hecke_cosets(n).size()) << n;
        std::set<Mat2Q> forms;
        for (const auto& m : classes) forms.insert(hermite_form(Mat2Q(m)));
        const auto reps = hecke_cosets(n);
        EXPECT_EQ(forms, std::set<Mat2Q>(reps.begin(), reps.end()));
    }
}

TEST(Hecke, HermiteFormIsLeftInvariant) {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const Mat2Q g(numtower::make_rational(rng.uniform(1, 9), rng.uniform(1, 4)), numtower::make_rational(rng.uniform(-9, 9), rng.uniform(1, 4)),
                      Rational(0), numtower::make_rational(rng.uniform(1, 9), rng.uniform(1, 4)));
        const Mat2Q moved = Mat2Q(random_sl2(rng)) * g * Mat2Q(random_sl2(rng));
        IntMat2 gamma;
        const Mat2Q h = hermite_form(moved, gamma);
        EXPECT_EQ(gamma.det(), 1);
        EXPECT_EQ(Mat2Q(gamma) * moved, h);
        EXPECT_EQ(hermite_form(Mat2Q(random_sl2(rng)) * moved), h);
        EXPECT_EQ(double_coset(moved), double_coset(g));
    }
}

TEST(Hecke, LeftCosetsOfDoubleCosets) {
    for (i64 m : {1, 2, 3, 4, 6, 12}) {
        i64 psi = m;
        for (i64 p : numtower::prime_divisors(m)) psi = psi / p * (p + 1);
        const auto& cosets = left_cosets({Rational(1, 2), m});
        EXPECT_EQ(static_cast<i64>(cosets.size()), psi);
        for (const auto& h : cosets) EXPECT_EQ(double_coset(h), (DoubleCoset{Rational(1, 2), m}));
    }
}

TEST(Mat2QType, RejectsNonPositiveDeterminant) {
    EXPECT_EQ(kind_of([] { Mat2Q(Rational(0), Rational(1), Rational(1), Rational(0)); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Mat2Q(Rational(1), Rational(2), Rational(2), Rational(4)); }), ErrorKind::InvalidArgument);
}

// ---------- points and the Γ×Γ action ----------

TEST(GammaAction, Examples) {
    const Gl2Point p{Mat2Q(), Mat2Residue::zero(4), {Rational(0), Rational(1)}};
    const Gl2Point same = gamma_action(IntMat2{}, IntMat2{}, p);
    EXPECT_EQ(same.g, p.g);
    EXPECT_EQ(same.z, p.z);
    EXPECT_EQ(gamma_action(IntMat2{}, IntMat2{1, 1, 0, 1}, p).z, (GaussQ{Rational(1), Rational(1)}));
    EXPECT_EQ(gamma_action(IntMat2{}, IntMat2{0, -1, 1, 0}, p).z, p.z);
    EXPECT_EQ(kind_of([&] { gamma_action(IntMat2{2, 0, 0, 1}, IntMat2{}, p); }), ErrorKind::InvalidArgument);
}

TEST(GammaAction, PreservesMembership) {
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const Mat2Q g(numtower::make_rational(rng.uniform(1, 6), rng.uniform(1, 3)), numtower::make_rational(rng.uniform(-3, 3), rng.uniform(1, 3)),
                      Rational(0), numtower::make_rational(rng.uniform(1, 6), rng.uniform(1, 3)));
        const Gl2Point p{g, random_residue(rng, 36), random_gauss(rng)};
        const Gl2Point q = gamma_action(random_sl2(rng), random_sl2(rng), p);
        EXPECT_EQ(in_space(p), in_space(q));
        EXPECT_GT(q.z.y, 0);
    }
}

TEST(FundamentalDomain, Reduction) {
    Rng rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const GaussQ z = random_gauss(rng);
        const auto r = reduce_to_fundamental_domain(z);
        const Rational n = r.z0.x * r.z0.x + r.z0.y * r.z0.y;
        EXPECT_GE(r.z0.x, Rational(-1, 2));
        EXPECT_LT(r.z0.x, Rational(1, 2));
        EXPECT_TRUE(n > 1 || (n == 1 && r.z0.x <= 0));
        EXPECT_EQ(r.delta.det(), 1);
        EXPECT_EQ(mobius(Mat2Q(r.delta), r.z0), z);
        EXPECT_EQ(reduce_to_fundamental_domain(mobius(Mat2Q(random_sl2(rng)), z)).z0, r.z0);
    }
    EXPECT_EQ(stabilizer({Rational(0), Rational(1)}).size(), 4u);
    EXPECT_EQ(reduce_to_fundamental_domain({Rational(3), Rational(1)}).z0, (GaussQ{Rational(0), Rational(1)}));
    EXPECT_EQ(reduce_to_fundamental_domain({Rational(3, 5), Rational(4, 5)}).z0, (GaussQ{Rational(-1, 2), Rational(1)}));
    // On the unit arc the right half is identified with the left by S.
    EXPECT_EQ(reduce_to_fundamental_domain({Rational(5, 13), Rational(12, 13)}).z0, (GaussQ{Rational(-5, 13), Rational(12, 13)}));
}

// ---------- the algebra ----------

ElementSample single(const Gl2Element& f, const Mat2Q& h) { return {f, {f}, {h}}; }

ElementSample random_element(Rng& rng) { return gl2::random_element(rng, 12, 6); }

Gl2Point random_point(Rng& rng, const std::vector<const ElementSample*>& factors) {
    return gl2::random_point(rng, factors, kHigh);
}

Mat2Residue random_rho(Rng& rng, i64 level = kHigh) { return random_residue(rng, level); }

TEST(Gl2Algebra, BasicElementsAreInvariant) {
    Rng rng(21);
    int nonzero = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const ElementSample sample = random_basic(rng, 12, 6);
        const Gl2Element& f = sample.element;
        const Gl2Point p = random_point(rng, {&sample});
        const Coefficient v = f.evaluate(p);
        if (!v.is_zero()) ++nonzero;
        const Gl2Point q = gamma_action(random_sl2(rng), random_sl2(rng), p);
        EXPECT_TRUE(close(v, f.evaluate(q), BigReal(kPrec)));
    }
    EXPECT_GT(nonzero, 100);
    // At z = i the stabilizer is averaged over; −1 acts on ρ alone.
    const Gl2Element f = Gl2Element::basic(12, Mat2Q(), IntMat2{1, 0, 0, 0}, Cyclotomic(Rational(1)), 1);
    const Gl2Point at_i{Mat2Q(), Mat2Residue(12, IntMat2{1, 0, 0, 0}), {Rational(0), Rational(1)}};
    const Gl2Point negated{Mat2Q(), Mat2Residue(12, IntMat2{-1, 0, 0, 0}), {Rational(0), Rational(1)}};
    EXPECT_EQ(f.evaluate(at_i).exact(), f.evaluate(negated).exact());
}

TEST(Gl2Algebra, SupportIsRespected) {
    Rng rng(22);
    const Gl2Element f = Gl2Element::basic(12, Mat2Q(Rational(2), Rational(0), Rational(0), Rational(1)), IntMat2{},
                                           Cyclotomic(Rational(1)), 6);
    EXPECT_EQ(f.support(), (std::set<DoubleCoset>{{Rational(1), 2}}));
    for (int trial = 0; trial < 50; ++trial) {
        const Gl2Point p{Mat2Q(Rational(3), Rational(1), Rational(0), Rational(1)), random_rho(rng), random_gauss(rng)};
        EXPECT_TRUE(f.evaluate(p).is_zero());
    }
    EXPECT_EQ(kind_of([] {
                  Gl2Element::basic(12, Mat2Q(Rational(7), Rational(0), Rational(0), Rational(1)), IntMat2{},
                                    Cyclotomic(Rational(1)), 6);
              }),
              ErrorKind::DeterminantBoundExceeded);
}

TEST(Gl2Algebra, IdentityIsAUnit) {
    Rng rng(23);
    const Gl2Element one = Gl2Element::identity();
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_element(rng);
        const Gl2Point p = random_point(rng, {&f});
        const Coefficient v = f.element.evaluate(p);
        EXPECT_TRUE(close(v, (one * f.element).evaluate(p), BigReal(kPrec)));
        EXPECT_TRUE(close(v, (f.element * one).evaluate(p), BigReal(kPrec)));
    }
    const Gl2Point p{Mat2Q(), random_rho(rng), random_gauss(rng)};
    EXPECT_TRUE(gl2_involution(one).evaluate(p).exact().is_one());
}

TEST(Gl2Algebra, DeterminantTwoProducts) {
    Rng rng(24);
    const Mat2Q two(Rational(2), Rational(0), Rational(0), Rational(1));
    const Gl2Element f = Gl2Element::basic(4, two, IntMat2{1, 0, 0, 1}, Cyclotomic(Rational(1)), 2);
    const Mat2Q upper(Rational(1), Rational(1), Rational(0), Rational(2));
    const Gl2Element g = Gl2Element::basic(4, upper, IntMat2{0, 1, 0, 0}, Cyclotomic(Rational(1)), 2);
    const Gl2Element fg = f * g;
    EXPECT_EQ(fg.det_bound(), 4);
    for (const auto& dc : fg.support()) EXPECT_EQ(dc.det(), 4);
    EXPECT_EQ(left_cosets(*g.support().begin()).size(), 3u);
    const ElementSample sf = single(f, two), sg = single(g, upper), one = single(Gl2Element::identity(), Mat2Q());
    int nonzero = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Gl2Point p = random_point(rng, {&sf, &sg});
        const Coefficient v = fg.evaluate(p);
        if (!v.is_zero()) ++nonzero;
        EXPECT_TRUE(close(v, oracle::triple_product(sf, sg, one, p), BigReal(kPrec)));
    }
    EXPECT_GT(nonzero, 20);
    EXPECT_EQ(kind_of([&] { gl2_convolve(f, g, 3); }), ErrorKind::DeterminantBoundExceeded);
}

TEST(Gl2Algebra, AssociativityAgainstDoubleSum) {
    Rng rng(25);
    int nonzero = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f1 = random_element(rng), f2 = random_element(rng), f3 = random_element(rng);
        const Gl2Element left = (f1.element * f2.element) * f3.element;
        const Gl2Element right = f1.element * (f2.element * f3.element);
        EXPECT_EQ(left.det_bound(), 216);
        for (int k = 0; k < 3; ++k) {
            const Gl2Point p = random_point(rng, {&f1, &f2, &f3});
            const Coefficient a = left.evaluate(p), b = right.evaluate(p);
            EXPECT_TRUE(close(a, b, BigReal(kPrec))) << a.str() << " vs " << b.str();
            EXPECT_TRUE(close(a, oracle::triple_product(f1, f2, f3, p), BigReal(kPrec)));
            if (!a.is_zero()) ++nonzero;
        }
    }
    EXPECT_GT(nonzero, 15);
}

TEST(Gl2Algebra, InvolutionIsAnAntiAutomorphism) {
    Rng rng(26);
    int nonzero = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f1 = random_element(rng), f2 = random_element(rng);
        const Gl2Element lhs = gl2_involution(f1.element * f2.element);
        const Gl2Element rhs = gl2_involution(f2.element) * gl2_involution(f1.element);
        const Gl2Element twice = gl2_involution(gl2_involution(f1.element));
        for (int k = 0; k < 3; ++k) {
            const auto p = flipped(random_point(rng, {&f1, &f2}));
            if (p) {
                const Coefficient a = lhs.evaluate(*p);
                EXPECT_TRUE(close(a, rhs.evaluate(*p), BigReal(kPrec)));
                EXPECT_TRUE(close(a, oracle::starred_product(f1, f2, *p), BigReal(kPrec)));
                if (!a.is_zero()) ++nonzero;
            }
            const Gl2Point q = random_point(rng, {&f1});
            EXPECT_TRUE(close(f1.element.evaluate(q), twice.evaluate(q), BigReal(kPrec)));
        }
    }
    EXPECT_GT(nonzero, 5);
}

TEST(Gl2Algebra, InvolutionSupport) {
    const Gl2Element f = Gl2Element::basic(12, Mat2Q(Rational(2), Rational(1), Rational(0), Rational(1)), IntMat2{},
                                           Cyclotomic(Rational(1)), 2);
    const Gl2Element star = gl2_involution(f);
    ASSERT_EQ(star.support().size(), 1u);
    EXPECT_EQ(star.support().begin()->det(), Rational(1, 2));
    EXPECT_EQ(gl2_involution(star).support(), f.support());
}

TEST(Gl2Algebra, TimeEvolution) {
    Rng rng(27);
    const Mat2Q six(Rational(6), Rational(0), Rational(0), Rational(1));
    const Gl2Element f = Gl2Element::basic(12, six, IntMat2{}, Cyclotomic(Rational(1)), 6);
    const Gl2Point p{six, random_rho(rng), {Rational(0), Rational(3)}};
    ASSERT_FALSE(f.evaluate(p).is_zero());
    EXPECT_EQ(gl2_time_evolve(f, TimeParam::imaginary(Rational(1))).evaluate(p).exact(), f.evaluate(p).exact() * Rational(1, 6));
    EXPECT_EQ(gl2_time_evolve(f, TimeParam::imaginary(Rational(0))).evaluate(p).exact(), f.evaluate(p).exact());
    EXPECT_EQ(kind_of([&] { gl2_time_evolve(f, TimeParam::real(Rational(1, 2))); }), ErrorKind::ModeMismatch);

    for (int trial = 0; trial < 15; ++trial) {
        const auto f1 = random_element(rng), f2 = random_element(rng);
        for (long beta : {1L, 2L, -1L}) {
            const TimeParam t = TimeParam::imaginary(Rational(beta));
            const Gl2Element lhs = gl2_time_evolve(f1.element * f2.element, t);
            const Gl2Element rhs = gl2_time_evolve(f1.element, t) * gl2_time_evolve(f2.element, t);
            const Gl2Point q = random_point(rng, {&f1, &f2});
            EXPECT_TRUE(close(lhs.evaluate(q), rhs.evaluate(q), BigReal(kPrec)));
        }
    }
}

TEST(Gl2Algebra, NumericGroupLaw) {
    Rng rng(28);
    const Mat2Q two(Rational(2), Rational(0), Rational(0), Rational(1));
    const Gl2Element f = Gl2Element::basic(4, two, IntMat2{1, 0, 0, 0}, Coefficient::one(Mode::numeric, kPrec), 2);
    const TimeParam s = TimeParam::real(Rational(3, 10)), t = TimeParam::real(Rational(17, 10));
    const BigReal tol = numtower::working_tolerance(kPrec);
    const ElementSample sample = single(f, two);
    for (int trial = 0; trial < 20; ++trial) {
        const Gl2Point p = random_point(rng, {&sample});
        const Coefficient a = gl2_time_evolve(gl2_time_evolve(f, t), s).evaluate(p);
        EXPECT_TRUE(close(a, gl2_time_evolve(f, s + t).evaluate(p), tol));
        EXPECT_TRUE(close(gl2_time_evolve(f, TimeParam::real(Rational(0))).evaluate(p), f.evaluate(p), tol));
    }
    EXPECT_EQ(kind_of([&] { return f + Gl2Element::identity(Mode::exact); }), ErrorKind::ModeMismatch);
}

TEST(Gl2Algebra, LowLevelRhoIsAnError) {
    const Gl2Element f = Gl2Element::basic(12, Mat2Q(), IntMat2{1, 0, 0, 0}, Cyclotomic(Rational(1)), 1);
    const Gl2Point p{Mat2Q(), Mat2Residue::zero(6), {Rational(0), Rational(2)}};
    EXPECT_EQ(kind_of([&] { f.evaluate(p); }), ErrorKind::LevelMismatch);
}

TEST(Gl2Algebra, Json) {
    const Gl2Element f = Gl2Element::basic(12, Mat2Q(Rational(1), Rational(1), Rational(0), Rational(2)), IntMat2{1, 2, 3, 4},
                                           Cyclotomic::root(12, 1), 2);
    numtower::Json j = gl2_involution(f) * f;
    EXPECT_EQ(j["det_bound"], 4);
    EXPECT_EQ(j["element"]["op"], "convolve");
    EXPECT_EQ(j["element"]["right"]["coset"]["d"], 2);
    EXPECT_EQ(j["element"]["right"]["coset"]["scalar"], "1");
}

// ---------- C^* and ℍ ----------

TEST(UpperHalf, Examples) {
    const BigReal one(1L, kPrec), zero(kPrec), two(2L, kPrec);
    const UpperHalfPoint i = quotient_to_h(cstar_embed(one, zero));
    EXPECT_EQ(i.z().re(), zero);
    EXPECT_EQ(i.z().im(), one);
    const UpperHalfPoint two_i = quotient_to_h({two, zero, zero, one});
    EXPECT_EQ(two_i.z().im(), two);
    EXPECT_EQ(kind_of([&] { cstar_embed(zero, zero); }), ErrorKind::DegenerateInput);
    EXPECT_EQ(kind_of([&] { quotient_to_h({one, zero, zero, -one}); }), ErrorKind::DegenerateInput);
    const UpperHalfPoint moved = mobius(Mat2Q(IntMat2{1, 1, 0, 1}), i);
    EXPECT_EQ(moved.z().re(), one);
}

TEST(UpperHalf, CStarIsTheFiberOverI) {
    Rng rng(29);
    const BigComplex i(BigReal(kPrec), BigReal(1L, kPrec));
    const BigReal tol = numtower::exp2i(-120, kPrec);
    for (int trial = 0; trial < 1000; ++trial) {
        const BigReal a(rng.real(-100, 100), kPrec), b(rng.real(-100, 100), kPrec);
        EXPECT_LE((quotient_to_h(cstar_embed(a, b)).z() - i).abs(), tol);
    }
}

// ---------- η ----------

TEST(Eta2, Examples) {
    const Mat2Residue rho(12, IntMat2{2, 4, 6, 8});
    const auto [x, y] = eta2(Mat2Q(), rho, Mat2Q());
    EXPECT_EQ(x, y);
    const Mat2Q g = Mat2Q::diag(Rational(2), Rational(1));
    const auto [l1, l2] = eta2(g, rho, Mat2Q());
    EXPECT_EQ(l1.basis, Mat2Q::diag(Rational(1, 2), Rational(1)));
    EXPECT_EQ(l2.basis, Mat2Q());
    EXPECT_TRUE(commensurable(l1, l2));
    const Mat2Q half = Mat2Q::diag(Rational(1, 2), Rational(1));
    EXPECT_EQ(kind_of([&] { eta2(half, Mat2Residue(12, IntMat2{1, 0, 0, 1}), Mat2Q()); }), ErrorKind::NotInSpace);
}

TEST(Eta2, InvariantUnderGammaPairs) {
    Rng rng(30);
    for (int trial = 0; trial < 300; ++trial) {
        const Mat2Q g = Mat2Q(random_sl2(rng)) * hecke_cosets(rng.uniform(1, 6)).front() * Mat2Q(random_sl2(rng));
        const Mat2Residue rho = random_residue(rng, 60);
        const GaussQ z = random_gauss(rng);
        const Mat2Q alpha(z.y, z.x, Rational(0), Rational(1));
        const IntMat2 g1 = random_sl2(rng), g2 = random_sl2(rng);
        const auto before = eta2(g, rho, alpha);
        const auto after = eta2(Mat2Q(g1) * g * Mat2Q(g2.adjugate()), rho.left(g2), Mat2Q(g2) * alpha);
        EXPECT_EQ(before.first, after.first);
        EXPECT_EQ(before.second, after.second);
        EXPECT_EQ(eta2(g, rho, z), before);
    }
}

TEST(Eta2, CommensurabilityDetectsBadLabels) {
    // (Λ₀, ρ) and (g⁻¹Λ₀, gρ) describe the same map Q²/Z² → QΛ.
    const Lattice2 a{Mat2Q(), Mat2Residue(12, IntMat2{1, 0, 0, 0})};
    const Lattice2 b{Mat2Q::diag(Rational(1, 2), Rational(1)), Mat2Residue(12, IntMat2{2, 0, 0, 0})};
    EXPECT_TRUE(commensurable(a, b));
    EXPECT_TRUE(commensurable(b, a));
    // Same lattices, different labels.
    EXPECT_FALSE(commensurable(a, Lattice2{Mat2Q(), Mat2Residue(12, IntMat2{5, 0, 0, 0})}));
    EXPECT_FALSE(commensurable(a, Lattice2{Mat2Q::diag(Rational(1, 2), Rational(1)), Mat2Residue(12, IntMat2{4, 0, 0, 0})}));
    // Cρ not integral.
    EXPECT_FALSE(commensurable(Lattice2{Mat2Q::diag(Rational(2), Rational(1)), Mat2Residue(12, IntMat2{0, 0, 0, 0})}, a));

    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat2Q g = Mat2Q(random_sl2(rng)) * hecke_cosets(rng.uniform(1, 6)).back();
        const Mat2Residue rho = random_residue(rng, 60);
        const auto grho = rho.act(g);
        ASSERT_TRUE(grho);
        const Lattice2 x = canonical({g.inverse(), *grho}), y = canonical({Mat2Q(), rho});
        EXPECT_TRUE(commensurable(x, y));
        const IntMat2& e = grho->entries();
        const Mat2Residue off(grho->level(), IntMat2{e.a + 1, e.b, e.c, e.d});
        EXPECT_FALSE(commensurable(canonical({g.inverse(), off}), y));
    }
}

}  // namespace
