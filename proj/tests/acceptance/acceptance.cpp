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

// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bcsys/bcalg/duality.hpp"
#include "bcsys/bcalg/relations.hpp"
#include "bcsys/error.hpp"
#include "bcsys/galois/galois.hpp"
#include "bcsys/gl2/upper_half.hpp"
#include "bcsys/kms/bc.hpp"
#include "bcsys/kms/finite.hpp"
#include "../support/generators.hpp"
#include "../support/gl2_oracle.hpp"

namespace {

using namespace bcsys;
using bcalg::Coefficient;
using kms::Beta;
using kms::StateValue;
using numtower::BigComplex;
using numtower::BigReal;
using numtower::Cyclotomic;
using numtower::i64;
using numtower::make_rational;
using numtower::QmodZ;
using numtower::Rational;

constexpr long kPrec = 128;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& why) {
        if (!ok && pass) detail = why;
        pass = pass && ok;
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::vector<i64> units(i64 b) {
    std::vector<i64> out;
    for (i64 u = 1; u <= b; ++u)
        if (numtower::gcd(u, b) == 1) out.push_back(u);
    return out;
}

kms::TruncationPolicy truncation(long m) {
    kms::TruncationPolicy p;
    p.max_terms = m;
    return p;
}

// ---------------------------------------------------------------- 1
Outcome bc_relations() {
    Outcome out;
    const std::vector<i64> ns{2, 3, 4, 6, 8, 12, 24};
    const auto rows = bcalg::check_relations(24, ns, numtower::elements_of_level(24));
    std::set<std::string> kinds;
    for (const auto& r : rows) {
        kinds.insert(r.relation.substr(0, 1));
        out.require(r.pass, "relation " + r.relation + " failed at " + r.instance);
    }
    out.require(kinds == std::set<std::string>{"a", "b", "c", "d"}, "not every relation family was exercised");
    bcalg::RelationOptions corrupt;
    corrupt.corrupt_generator = true;
    out.require(!bcalg::all_pass(bcalg::check_relations(24, {2, 3}, numtower::elements_of_level(24), corrupt)),
                "corrupted generator went unnoticed");
    if (out.pass) out.detail = std::to_string(rows.size()) + " instances";
    return out;
}

// ---------------------------------------------------------------- 2
Outcome gibbs_kms() {
    Outcome out;
    Rng rng(42);
    const kms::FiniteDynSystem sys(kms::random_hermitian(rng, 4, kPrec));
    const BigReal tol(1e-10, kPrec), control(1e-3, kPrec);
    const kms::DensityState trace(kms::CMatrix::identity(4, kPrec));
    double worst = 0, weakest_control = 1e300;
    for (const Beta beta : {Beta(Rational(1, 2)), Beta(1), Beta(2)}) {
        const kms::DensityState phi = kms::DensityState::gibbs(sys, beta.real(kPrec));
        for (int k = 0; k < 20; ++k) {
            const kms::CMatrix x = kms::random_matrix(rng, 4, kPrec), y = kms::random_matrix(rng, 4, kPrec);
            const BigReal res = kms::kms_boundary_check(sys, beta, x, y);
            const BigReal inv = (phi(sys.evolve(x, BigReal(rng.real(-5, 5), kPrec))) - phi(x)).abs();
            const BigReal neg = kms::kms_residual(trace, sys, beta, x, y);
            out.require(res <= tol, "KMS residual " + res.str(4) + " at beta " + beta.str());
            out.require(inv <= tol, "invariance residual " + inv.str(4));
            out.require(neg > control, "non-Gibbs control residual only " + neg.str(4));
            worst = std::max({worst, res.to_double(), inv.to_double()});
            weakest_control = std::min(weakest_control, neg.to_double());
        }
    }
    if (out.pass) out.detail = "max residual " + fmt(worst) + ", min control residual " + fmt(weakest_control);
    return out;
}

// ---------------------------------------------------------------- 3
Outcome high_temperature() {
    Outcome out;
    int zeros = 0;
    for (i64 b = 2; b <= 12; ++b)
        for (i64 a = 1; a < b; ++a) {
            if (numtower::gcd(a, b) != 1) continue;
            const StateValue v = kms::high_temp_state(QmodZ(a, b), Beta(1), kPrec);
            const bool zero = v.is_exact() && std::get<Cyclotomic>(v.value).is_zero();
            out.require(zero, "phi_1(e(" + QmodZ(a, b).str() + ")) is not an exact zero");
            zeros += zero ? 1 : 0;
        }
    const StateValue half = kms::high_temp_state(QmodZ(1, 2), Beta(Rational(1, 2)), kPrec);
    const long double expected = std::sqrt(2.0L) - 1.0L;
    const BigComplex got = half.numeric(kPrec);
    const long double dev = std::fabs(static_cast<long double>(got.re().to_double()) - expected);
    out.require(dev <= 1e-12L && got.im().is_zero(), "sqrt(2)-1 deviation " + fmt(static_cast<double>(dev)));
    if (out.pass) out.detail = std::to_string(zeros) + " exact zeros, sqrt(2)-1 deviation " + fmt(static_cast<double>(dev));
    return out;
}

// ---------------------------------------------------------------- 4
// Independent value: Σ_{n≤N} n⁻² e(un/b) / Σ_{n≤N} n⁻² in long double, N = 10⁶, plus the tail.
std::pair<long double, long double> dirichlet_oracle(i64 b, i64 u) {
    long double re = 0, im = 0, z = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (long n = 1000000; n >= 1; --n) {
        const long double w = 1.0L / (static_cast<long double>(n) * n);
        const long double angle = two_pi * static_cast<long double>((u * n) % b) / b;
        re += w * std::cos(angle);
        im += w * std::sin(angle);
        z += w;
    }
    return {re / z, im / z};
}

Outcome low_temperature() {
    Outcome out;
    const Beta beta(2);
    double worst_sum = 0;
    for (i64 b : {2, 3, 5})
        for (i64 u : units(b)) {
            const QmodZ r(1, b);
            const auto paths = kms::low_temp_paths(r, beta, u, truncation(100000), kPrec);
            const StateValue gibbs = kms::truncated_bc_gibbs(r, beta, u, 100000, kPrec);
            const BigComplex d = paths.direct.numeric(kPrec), h = paths.hurwitz.numeric(kPrec), g = gibbs.numeric(kPrec);
            const BigReal &bd = paths.direct.error_bound, &bh = paths.hurwitz.error_bound, &bg = gibbs.error_bound;
            const std::string where = " (b=" + std::to_string(b) + ", u=" + std::to_string(u) + ")";
            out.require((d - h).abs() <= bd + bh, "direct vs hurwitz" + where);
            out.require((g - h).abs() <= bg + bh, "trace vs hurwitz" + where);
            out.require((d - g).abs() <= bd + bg, "direct vs trace" + where);
            const BigReal sum = bd + bh + bg;
            out.require(sum <= BigReal(3e-5, kPrec), "summed bound " + sum.str(4) + where);
            worst_sum = std::max(worst_sum, sum.to_double());
            const auto [ore, oim] = dirichlet_oracle(b, u);
            const double oracle_dev = std::hypot(h.re().to_double() - static_cast<double>(ore), h.im().to_double() - static_cast<double>(oim));
            out.require(oracle_dev <= 3e-5, "long-double oracle deviation " + fmt(oracle_dev) + where);
            if (b == 2)
                out.require((h - BigComplex(BigReal(Rational(-1, 2), kPrec))).abs() <= bh, "b=2 value is not -1/2 within bound");
        }
    if (out.pass) out.detail = "max summed bound " + fmt(worst_sum);
    return out;
}

// ---------------------------------------------------------------- 5
// Σ_{n<N} n⁻² + Euler–Maclaurin tail 1/N + 1/(2N²) + 1/(6N³) − 1/(30N⁵), N = 4000, 192 bits.
BigReal zeta2_oracle() {
    const long prec = 192;
    const long big_n = 4000;
    BigReal s(prec);
    for (long n = big_n - 1; n >= 1; --n) s += BigReal(1L, prec) / BigReal(static_cast<long>(n) * n, prec);
    const BigReal n(big_n, prec);
    const BigReal one(1L, prec);
    s += one / n + one / (BigReal(2L, prec) * n * n) + one / (BigReal(6L, prec) * n * n * n) -
         one / (BigReal(30L, prec) * n * n * n * n * n);
    return s;
}

Outcome partition() {
    Outcome out;
    const StateValue z = kms::partition_function(Beta(2), truncation(1000000), kPrec);
    const BigReal value = z.numeric(kPrec).re();
    const BigReal oracle = zeta2_oracle();
    const BigReal dev = numtower::abs(value - oracle);
    const BigReal pi = BigReal::pi(192);
    out.require(numtower::abs(oracle - pi * pi / BigReal(6L, 192)) <= BigReal(1e-20, 192), "oracle disagrees with pi^2/6");
    out.require(dev <= BigReal(1e-6, kPrec), "deviation " + dev.str(4));
    out.require(dev <= z.error_bound, "deviation " + dev.str(4) + " exceeds the reported bound " + z.error_bound.str(4));
    if (out.pass) out.detail = "deviation " + dev.str(4) + ", bound " + z.error_bound.str(4);
    return out;
}

// ---------------------------------------------------------------- 6
Outcome galois_intertwining() {
    Outcome out;
    int exact_rows = 0;
    for (i64 b : {3, 4, 5, 8, 12})
        for (i64 u : units(b))
            for (i64 iota : units(b))
                for (const auto& row : galois::intertwining_check(b, Beta::infinity(), u, iota)) {
                    out.require(row.pass, "exact row failed at b=" + std::to_string(b));
                    // γ_u(ζ_b^{ιa}) = ζ_b^{uιa}, by hand.
                    const Cyclotomic expected = Cyclotomic::root(b, numtower::mod(u * iota * row.a, b)).canonical();
                    out.require(std::get<Cyclotomic>(row.lhs.value).canonical() == expected, "lhs differs from zeta_b^(u iota a)");
                    ++exact_rows;
                }
    const BigReal tol(1e-8, kPrec);
    for (i64 u : units(5))
        for (const auto& row : galois::intertwining_check(5, Beta(3), u, 1, truncation(100000), kPrec)) {
            const BigReal dev = (row.lhs.numeric(kPrec) - row.rhs.numeric(kPrec)).abs();
            out.require(row.pass && dev <= tol, "numeric row deviation " + dev.str(4));
        }
    if (out.pass) out.detail = std::to_string(exact_rows) + " exact rows";
    return out;
}

// ---------------------------------------------------------------- 7
std::optional<qlat1d::Witness> brute_force_witness(const qlat1d::QLattice1D& a, const qlat1d::QLattice1D& b, i64 bound) {
    const i64 g = numtower::gcd(a.level(), b.level());
    for (i64 m = 1; m <= bound; ++m)
        for (i64 n = 1; n <= bound; ++n) {
            if (numtower::gcd(m, n) != 1 || m * a.scale() != n * b.scale()) continue;
            if (numtower::mod(n * a.rho().residue() - m * b.rho().residue(), g) == 0) return qlat1d::Witness{m, n};
        }
    return std::nullopt;
}

bool witness_holds(const qlat1d::QLattice1D& a, const qlat1d::QLattice1D& b, const qlat1d::Witness& w) {
    const i64 g = numtower::gcd(a.level(), b.level());
    return numtower::gcd(w.m, w.n) == 1 && Rational(w.m) * a.scale() == Rational(w.n) * b.scale() &&
           numtower::mod(numtower::mulmod(w.n, a.rho().residue(), g) - numtower::mulmod(w.m, b.rho().residue(), g), g) == 0;
}

Outcome commensurability() {
    Outcome out;
    Rng rng(7);
    int commensurable_pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen::random_lattice(rng, 60), b = gen::random_lattice(rng, 60);
        out.require(qlat1d::commensurable(a, a), "not reflexive");
        const auto w = qlat1d::commensurability_witness(a, b);
        const auto back = qlat1d::commensurability_witness(b, a);
        out.require(w.has_value() == back.has_value() && (!w || *back == qlat1d::Witness{w->n, w->m}), "not symmetric");
        out.require(w == brute_force_witness(a, b, 144), "witness differs from brute force");
        if (w) {
            ++commensurable_pairs;
            out.require(witness_holds(a, b, *w), "invalid witness");
        }
        out.require(qlat1d::same_lattice(qlat1d::lattice_from_json(numtower::Json(a)), a), "JSON round trip");
    }
    for (int i = 0; i < 1000; ++i) {
        const auto l1 = gen::random_lattice(rng, 60);
        const auto l2 = gen::groupoid_move(rng, l1);
        const auto l3 = gen::groupoid_move(rng, l2);
        const auto w12 = qlat1d::commensurability_witness(l1, l2), w23 = qlat1d::commensurability_witness(l2, l3),
                   w13 = qlat1d::commensurability_witness(l1, l3);
        out.require(w12 && w23 && w13, "transitivity chain broke");
        if (w12 && w23 && w13)
            out.require(witness_holds(l1, l2, *w12) && witness_holds(l2, l3, *w23) && witness_holds(l1, l3, *w13), "chain witness invalid");
    }
    if (out.pass) out.detail = std::to_string(commensurable_pairs) + " random commensurable pairs, 1000 chains";
    return out;
}

// ---------------------------------------------------------------- 8
Outcome groupoid() {
    Outcome out;
    Rng rng(8);
    int eta_pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto [p1, p2, p3] = gen::random_composable_triple(rng, 60);
        const auto p12 = qlat1d::groupoid_compose(p1, p2);
        out.require(qlat1d::groupoid_compose(p12, p3) == qlat1d::groupoid_compose(p1, qlat1d::groupoid_compose(p2, p3)), "not associative");
        out.require(p12.source() == p2.source(), "source law");
        const i64 g = numtower::gcd(p12.target().level(), p1.target().level());
        out.require(p12.target().lower(g) == p1.target().lower(g), "target law");
        // The composite ratio, by hand.
        out.require(p12.ratio() == p1.ratio() * p2.ratio(), "ratio of the composite");
        for (const auto* p : {&p1, &p2, &p12}) {
            const auto [x, y] = qlat1d::eta(*p);
            out.require(qlat1d::commensurable(x, y), "eta pair not commensurable");
            ++eta_pairs;
        }
    }
    if (out.pass) out.detail = "1000 triples, " + std::to_string(eta_pairs) + " eta pairs";
    return out;
}

// ---------------------------------------------------------------- 9
Outcome duality() {
    Outcome out;
    int points = 0;
    for (i64 b = 1; b <= 12; ++b)
        for (i64 n = 1; n <= 12; ++n) {
            out.require(bcalg::gelfand_square_check(n, b), "square fails at n=" + std::to_string(n) + ", b=" + std::to_string(b));
            // Both legs agree with [n | ρ]·e((ρ/n)r), evaluated by hand at level n·b.
            for (i64 a = 0; a < b; ++a) {
                const QmodZ r(a, b);
                const auto x = bcalg::GroupAlgebraElement::basis(r, b);
                const auto down = bcalg::gelfand(bcalg::beta_action(n, x));
                const auto across = bcalg::alpha_action(n, bcalg::gelfand(x));
                for (i64 rho = 0; rho < n * b; ++rho) {
                    const Cyclotomic expected =
                        rho % n == 0 ? Cyclotomic::root(b, numtower::mod((rho / n) * a, b)).canonical() : Cyclotomic();
                    out.require(down.at(rho).exact().canonical() == expected, "Gamma(beta_n) differs from the hand value");
                    out.require(across.at(rho).exact().canonical() == expected, "alpha_n(Gamma) differs from the hand value");
                    ++points;
                }
            }
        }
    if (out.pass) out.detail = std::to_string(points) + " points";
    return out;
}

// ---------------------------------------------------------------- 10
Outcome gl2_algebra() {
    using namespace bcsys::gl2;
    Outcome out;
    for (i64 n = 1; n <= 50; ++n) {
        const auto reps = hecke_cosets(n);
        std::set<Mat2Q> forms;
        for (const auto& h : reps) forms.insert(hermite_form(h));
        out.require(static_cast<i64>(reps.size()) == numtower::sigma1(n) && forms.size() == reps.size(), "coset count at n=" + std::to_string(n));
        if (n <= 10) {
            std::set<Mat2Q> brute;
            for (const auto& m : oracle::brute_force_classes(n)) brute.insert(hermite_form(Mat2Q(m)));
            out.require(brute == std::set<Mat2Q>(reps.begin(), reps.end()), "brute-force classes differ at n=" + std::to_string(n));
        }
    }

    Rng rng(10);
    const i64 level = 12, bound = 6, rho_level = sampling_level(level);
    const BigReal exact(kPrec);
    int nonzero = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f1 = random_element(rng, level, bound), f2 = random_element(rng, level, bound), f3 = random_element(rng, level, bound);
        const Gl2Element left = (f1.element * f2.element) * f3.element, right = f1.element * (f2.element * f3.element);
        const Gl2Element star = gl2_involution(f1.element * f2.element);
        const Gl2Element anti = gl2_involution(f2.element) * gl2_involution(f1.element);
        const TimeParam at_i = TimeParam::imaginary(Rational(1));
        const Gl2Element sig = gl2_time_evolve(f1.element * f2.element, at_i);
        const Gl2Element sig_split = gl2_time_evolve(f1.element, at_i) * gl2_time_evolve(f2.element, at_i);
        for (int k = 0; k < 3; ++k) {
            const Gl2Point p = random_point(rng, {&f1, &f2, &f3}, rho_level);
            const Coefficient a = left.evaluate(p);
            out.require(close(a, right.evaluate(p), exact), "associativity");
            out.require(close(a, oracle::triple_product(f1, f2, f3, p), exact), "triple product differs from the double-sum oracle");
            nonzero += a.is_zero() ? 0 : 1;
            if (const auto q = flipped(random_point(rng, {&f1, &f2}, rho_level))) {
                const Coefficient s = star.evaluate(*q);
                out.require(close(s, anti.evaluate(*q), exact), "involution is not an anti-automorphism");
                out.require(close(s, oracle::starred_product(f1, f2, *q), exact), "involution differs from its oracle");
                nonzero += s.is_zero() ? 0 : 1;
            }
            const Gl2Point q2 = random_point(rng, {&f1, &f2}, rho_level);
            out.require(close(sig.evaluate(q2), sig_split.evaluate(q2), exact), "sigma_i is not multiplicative");
        }
    }
    out.require(nonzero >= 20, "too few nonzero comparisons: " + std::to_string(nonzero));
    // σ_i multiplies by det(g)^{-1}.
    const Mat2Q six(Rational(6), Rational(0), Rational(0), Rational(1));
    const Gl2Element f = Gl2Element::basic(level, six, IntMat2{}, Cyclotomic(Rational(1)), bound);
    const Gl2Point p6{six, Mat2Residue::zero(level), {Rational(0), Rational(2)}};
    out.require(gl2_time_evolve(f, TimeParam::imaginary(Rational(1))).evaluate(p6).exact() == f.evaluate(p6).exact() * Rational(1, 6),
                "sigma_i does not scale by 1/det");

    const BigComplex i(BigReal(kPrec), BigReal(1L, kPrec));
    const BigReal tol = numtower::exp2i(-120, kPrec);
    for (int k = 0; k < 1000; ++k) {
        const BigReal a(rng.real(-100, 100), kPrec), b(rng.real(-100, 100), kPrec);
        out.require((quotient_to_h(cstar_embed(a, b)).z() - i).abs() <= tol, "C* fiber point off i");
    }
    if (out.pass) out.detail = std::to_string(nonzero) + " nonzero exact comparisons";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "BC relations exact at level 24", 30, bc_relations},
        {2, "Gibbs KMS boundary, dim 4", 5, gibbs_kms},
        {3, "high-temperature values", 60, high_temperature},
        {4, "low-temperature three-path agreement", 60, low_temperature},
        {5, "partition function Z(2)", 60, partition},
        {6, "Galois intertwining", 60, galois_intertwining},
        {7, "commensurability laws", 10, commensurability},
        {8, "groupoid structure and eta", 60, groupoid},
        {9, "duality square", 60, duality},
        {10, "GL2 algebra", 60, gl2_algebra},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.pass = false;
            o.detail = "took " + fmt(secs) + " s, limit " + fmt(c.limit_seconds) + " s";
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2d  %s  %-40s %7.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
