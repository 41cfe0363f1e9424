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

#include <set>

#include "bcsys/cli/commands.hpp"
#include "bcsys/gl2/sampling.hpp"
#include "bcsys/gl2/upper_half.hpp"

namespace bcsys::cli {

using namespace bcsys::gl2;
using numtower::BigComplex;
using numtower::BigReal;
using numtower::Rational;

Report cmd_gl2_hecke(const RunConfig&, i64 max_n) {
    Report report{"gl2-hecke"};
    for (i64 n = 1; n <= max_n; ++n) {
        const auto reps = hecke_cosets(n);
        std::set<Mat2Q> forms;
        Json listed = Json::array();
        bool reduced = true;
        for (const auto& r : reps) {
            forms.insert(hermite_form(r));
            reduced = reduced && hermite_form(r) == r && r.det() == n;
            listed.push_back(r.str());
        }
        const i64 sigma = numtower::sigma1(n);
        const bool ok = reduced && forms.size() == reps.size() && static_cast<i64>(reps.size()) == sigma;
        report.add(Json{{"n", n}, {"count", reps.size()}, {"sigma1", sigma}, {"representatives", listed}}, ok);
    }
    report.summary = {{"max_n", max_n}};
    return report;
}

Report cmd_gl2_conv_check(const RunConfig& config, i64 det_bound, int trials) {
    Report report{"gl2-conv-check"};
    Rng rng(config.seed);
    const i64 level = config.level, rho_level = sampling_level(config.level);
    const BigReal exact(config.precision);  // zero tolerance: exact mode compares exactly
    const Gl2Element one = Gl2Element::identity();
    const TimeParam at_i = TimeParam::imaginary(Rational(1));
    i64 nonzero = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto f1 = random_element(rng, level, det_bound), f2 = random_element(rng, level, det_bound),
                   f3 = random_element(rng, level, det_bound);
        const Gl2Element left = (f1.element * f2.element) * f3.element, right = f1.element * (f2.element * f3.element);
        const Gl2Element star_lhs = gl2_involution(f1.element * f2.element);
        const Gl2Element star_rhs = gl2_involution(f2.element) * gl2_involution(f1.element);
        const Gl2Element twice = gl2_involution(gl2_involution(f1.element));
        const Gl2Element sigma_lhs = gl2_time_evolve(f1.element * f2.element, at_i);
        const Gl2Element sigma_rhs = gl2_time_evolve(f1.element, at_i) * gl2_time_evolve(f2.element, at_i);
        bool assoc = true, invol = true, dstar = true, sigma = true, unit = true;
        for (int k = 0; k < 3; ++k) {
            const Gl2Point p = random_point(rng, {&f1, &f2, &f3}, rho_level);
            const Coefficient a = left.evaluate(p);
            nonzero += a.is_zero() ? 0 : 1;
            assoc = assoc && close(a, right.evaluate(p), exact);
            if (const auto q = flipped(random_point(rng, {&f1, &f2}, rho_level))) {
                const Coefficient s = star_lhs.evaluate(*q);
                nonzero += s.is_zero() ? 0 : 1;
                invol = invol && close(s, star_rhs.evaluate(*q), exact);
            }
            const Gl2Point q1 = random_point(rng, {&f1}, rho_level);
            dstar = dstar && close(f1.element.evaluate(q1), twice.evaluate(q1), exact);
            unit = unit && close(f1.element.evaluate(q1), (one * f1.element).evaluate(q1), exact) &&
                   close(f1.element.evaluate(q1), (f1.element * one).evaluate(q1), exact);
            const Gl2Point q2 = random_point(rng, {&f1, &f2}, rho_level);
            sigma = sigma && close(sigma_lhs.evaluate(q2), sigma_rhs.evaluate(q2), exact);
        }
        report.add(Json{{"trial", trial},
                        {"associativity", assoc},
                        {"involution_anti", invol},
                        {"double_star", dstar},
                        {"sigma_i_multiplicative", sigma},
                        {"identity", unit}},
                   assoc && invol && dstar && sigma && unit);
    }
    // All-zero comparisons would prove nothing.
    if (nonzero == 0 && trials > 0) report.pass = false;
    report.summary = {{"level", level}, {"det_bound", det_bound}, {"trials", trials}, {"nonzero_values", nonzero}};
    return report;
}

Report cmd_gl2_fiber_check(const RunConfig& config, int samples) {
    Report report{"gl2-fiber-check"};
    const long prec = config.precision;
    Rng rng(config.seed);
    const BigComplex i(BigReal(prec), BigReal(1L, prec));
    const BigReal tol = numtower::exp2i(-120, prec);
    BigReal worst(prec);
    for (int k = 0; k < samples; ++k) {
        const BigReal a(rng.real(-100, 100), prec), b(rng.real(-100, 100), prec);
        worst = numtower::max(worst, (quotient_to_h(cstar_embed(a, b)).z() - i).abs());
    }
    report.add(Json{{"check", "cstar_fiber"}, {"samples", samples}, {"max_residual", worst.str(6)}, {"tolerance", "2^-120"}},
               worst <= tol);
    const BigReal one(1L, prec), zero(prec), two(2L, prec);
    const BigReal dev = (quotient_to_h({two, zero, zero, one}).z() - BigComplex(zero, two)).abs();
    report.add(Json{{"check", "diag(2,1) -> 2i"}, {"samples", 1}, {"max_residual", dev.str(6)}, {"tolerance", "2^-120"}},
               dev <= tol);
    report.summary = {{"max_residual", worst.str(6)}};
    return report;
}

}  // namespace bcsys::cli
