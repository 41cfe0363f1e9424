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

#include <string>

#include "bcsys/bcalg/relations.hpp"
#include "bcsys/cli/commands.hpp"
#include "bcsys/error.hpp"
#include "bcsys/galois/galois.hpp"
#include "bcsys/kms/bc.hpp"
#include "bcsys/kms/finite.hpp"
#include "bcsys/numtower/hurwitz.hpp"
#include "bcsys/rng.hpp"

namespace bcsys::cli {

using kms::Beta;
using kms::StateValue;
using numtower::BigComplex;
using numtower::BigReal;
using numtower::Cyclotomic;
using numtower::Rational;

namespace {

std::string short_str(const BigReal& x) { return x.str(6); }

// {beta, element, iota, [exact], value, error_bound, method}
Json state_row(const QmodZ& r, i64 iota, const StateValue& v) {
    Json row{{"beta", v.beta}, {"element", r.str()}, {"iota", iota}};
    const Json full = v;
    for (const auto& [k, x] : full.items())
        if (k != "beta") row[k] = x;
    if (v.is_exact()) row["exact"] = std::get<Cyclotomic>(v.value).canonical().str();
    return row;
}

kms::TruncationPolicy policy_of(const RunConfig& c) {
    kms::TruncationPolicy p;
    p.max_terms = c.truncation;
    return p;
}

std::vector<i64> units(i64 b) {
    std::vector<i64> out;
    for (i64 u = 1; u <= b; ++u)
        if (numtower::gcd(u, b) == 1) out.push_back(u);
    return out;
}

}  // namespace

Report cmd_bc_relations(const RunConfig& config, bool corrupt_generator) {
    Report report{"bc-relations"};
    bcalg::RelationOptions options;
    options.corrupt_generator = corrupt_generator;
    const auto rows =
        bcalg::check_relations(config.level, numtower::divisors(config.level), numtower::elements_of_level(config.level), options);
    i64 failures = 0;
    for (const auto& r : rows) {
        report.add(Json(r), r.pass);
        failures += r.pass ? 0 : 1;
    }
    report.summary = {{"instances", rows.size()}, {"failures", failures}};
    return report;
}

std::vector<QmodZ> parse_elements(const std::vector<std::string>& specs) {
    std::vector<QmodZ> out;
    for (const auto& s : specs) {
        if (s.rfind("upto:", 0) == 0) {
            const i64 max_b = std::stoll(s.substr(5));
            for (i64 b = 2; b <= max_b; ++b)
                for (i64 a = 1; a < b; ++a)
                    if (numtower::gcd(a, b) == 1) out.emplace_back(a, b);
            continue;
        }
        out.push_back(QmodZ::parse(s));
    }
    return out;
}

Report cmd_kms_eval(const RunConfig& config, const std::vector<Beta>& betas, const std::vector<QmodZ>& elements, i64 iota) {
    Report report{"kms-eval"};
    for (const Beta& beta : betas)
        for (const QmodZ& r : elements) {
            try {
                if (beta.is_infinite()) {
                    const Cyclotomic v = kms::ground_state(r, iota);
                    Json row{{"beta", beta}, {"element", r.str()}, {"iota", iota}, {"exact", v.canonical().str()}};
                    row["value"] = v.embed(config.precision);
                    row["error_bound"] = "0";
                    row["method"] = "ground state";
                    report.add(std::move(row), true);
                } else if (beta.value() <= 1) {
                    report.add(state_row(r, iota, kms::high_temp_state(r, beta, config.precision)), true);
                } else {
                    report.add(state_row(r, iota, kms::low_temp_state(r, beta, iota, policy_of(config), config.precision)), true);
                }
            } catch (const Error& e) {
                report.add(Json{{"beta", beta}, {"element", r.str()}, {"iota", iota}, {"error", e.what()}}, false);
            }
        }
    report.summary = {{"rows", report.rows.size()}};
    return report;
}

Report cmd_high_temp_check(const RunConfig& config, i64 max_b) {
    Report report{"high-temp-check"};
    i64 zeros = 0;
    for (i64 b = 2; b <= max_b; ++b)
        for (i64 a = 1; a < b; ++a) {
            if (numtower::gcd(a, b) != 1) continue;
            const QmodZ r(a, b);
            const StateValue v = kms::high_temp_state(r, Beta(1), config.precision);
            const bool ok = v.is_exact() && std::get<Cyclotomic>(v.value).is_zero();
            zeros += ok ? 1 : 0;
            report.add(state_row(r, 1, v), ok);
        }
    const StateValue half = kms::high_temp_state(QmodZ(1, 2), Beta(Rational(1, 2)), config.precision);
    const BigReal expected = numtower::sqrt(BigReal(2L, config.precision)) - BigReal(1L, config.precision);
    const BigReal err = (half.numeric(config.precision) - BigComplex(expected)).abs();
    Json row = state_row(QmodZ(1, 2), 1, half);
    row["expected"] = expected;
    row["deviation"] = short_str(err);
    report.add(std::move(row), err <= BigReal(1e-12, config.precision));
    report.summary = {{"exact_zeros", zeros}, {"sqrt2_minus_1_deviation", short_str(err)}};
    return report;
}

Report cmd_low_temp_check(const RunConfig& config, const Beta& beta, const std::vector<i64>& conductors) {
    Report report{"low-temp-check"};
    const long prec = config.precision;
    const BigReal budget(3e-5, prec);
    BigReal worst(prec);
    for (i64 b : conductors) {
        const QmodZ r(1, b);
        for (i64 u : units(b)) {
            const auto paths = kms::low_temp_paths(r, beta, u, policy_of(config), prec);
            const StateValue gibbs = kms::truncated_bc_gibbs(r, beta, u, config.truncation, prec);
            const BigComplex d = paths.direct.numeric(prec), h = paths.hurwitz.numeric(prec), g = gibbs.numeric(prec);
            const BigReal &bd = paths.direct.error_bound, &bh = paths.hurwitz.error_bound, &bg = gibbs.error_bound;
            const BigReal total = bd + bh + bg;
            bool ok = (d - h).abs() <= bd + bh && (g - h).abs() <= bg + bh && (d - g).abs() <= bd + bg && total <= budget;
            Json row{{"beta", beta}, {"element", r.str()}, {"iota", u}, {"direct", d}, {"hurwitz", h}, {"gibbs_trace", g},
                     {"bound_sum", short_str(total)}};
            if (b == 2) {
                const BigReal dev = (h - BigComplex(BigReal(Rational(-1, 2), prec))).abs();
                row["minus_half_deviation"] = short_str(dev);
                if (beta == Beta(2)) ok = ok && dev <= bh;
            }
            worst = numtower::max(worst, total);
            report.add(std::move(row), ok);
        }
    }
    report.summary = {{"max_bound_sum", short_str(worst)}, {"budget", "3e-5"}};
    return report;
}

Report cmd_partition(const RunConfig& config, const Beta& beta) {
    Report report{"partition"};
    const long prec = config.precision;
    const StateValue z = kms::partition_function(beta, policy_of(config), prec);
    const BigReal value = z.numeric(prec).re();
    const numtower::Bounded ref = numtower::hurwitz_zeta(beta.real(prec), Rational(1), prec);
    const BigReal diff = numtower::abs(value - ref.value.re());
    Json row{{"beta", beta}, {"terms", config.truncation}, {"value", value}, {"error_bound", short_str(z.error_bound)},
             {"reference", "hurwitz"}, {"reference_value", ref.value.re()}, {"deviation", short_str(diff)}};
    report.add(std::move(row), diff <= z.error_bound + ref.bound);
    if (beta == Beta(2)) {
        const BigReal pi = BigReal::pi(prec);
        const BigReal closed = pi * pi / BigReal(6L, prec);
        const BigReal dev = numtower::abs(value - closed);
        report.add(Json{{"beta", beta}, {"terms", config.truncation}, {"value", value}, {"error_bound", short_str(z.error_bound)},
                        {"reference", "pi^2/6"}, {"reference_value", closed}, {"deviation", short_str(dev)}},
                   dev <= z.error_bound);
    }
    report.summary = {{"value", value}, {"error_bound", short_str(z.error_bound)}};
    return report;
}

Report cmd_galois_verify(const RunConfig& config, const std::vector<i64>& conductors, const std::vector<Beta>& betas, i64 iota) {
    Report report{"galois-verify"};
    i64 checked = 0;
    for (i64 b : conductors)
        for (const Beta& beta : betas)
            for (i64 u : units(b))
                for (const auto& row : galois::intertwining_check(b, beta, u, iota, policy_of(config), config.precision)) {
                    report.add(Json(row), row.pass);
                    ++checked;
                }
    report.summary = {{"rows", checked}};
    return report;
}

Report cmd_gibbs_check(const RunConfig& config, std::size_t dim, const std::vector<Beta>& betas, int pairs, bool non_gibbs) {
    Report report{"gibbs-check"};
    const long prec = config.precision;
    const BigReal tol(1e-10, prec);
    Rng rng(config.seed);
    const kms::FiniteDynSystem sys(kms::random_hermitian(rng, dim, prec));
    BigReal worst_kms(prec), worst_inv(prec);
    for (const Beta& beta : betas) {
        if (beta.is_infinite()) throw Error(ErrorKind::InvalidArgument, "gibbs-check needs finite beta");
        const kms::DensityState phi =
            non_gibbs ? kms::DensityState(kms::CMatrix::identity(dim, prec)) : kms::DensityState::gibbs(sys, beta.real(prec));
        for (int k = 0; k < pairs; ++k) {
            const kms::CMatrix x = kms::random_matrix(rng, dim, prec), y = kms::random_matrix(rng, dim, prec);
            const BigReal t(rng.real(-3, 3), prec);
            const BigReal kms_res = non_gibbs ? kms::kms_residual(phi, sys, beta, x, y) : kms::kms_boundary_check(sys, beta, x, y);
            const BigReal inv_res = (phi(sys.evolve(x, t)) - phi(x)).abs();
            worst_kms = numtower::max(worst_kms, kms_res);
            worst_inv = numtower::max(worst_inv, inv_res);
            report.add(Json{{"beta", beta}, {"pair", k}, {"kms_residual", short_str(kms_res)}, {"invariance_residual", short_str(inv_res)}},
                       kms_res <= tol && inv_res <= tol);
        }
    }
    report.summary = {{"dim", dim}, {"state", non_gibbs ? "trace" : "gibbs"}, {"max_kms_residual", short_str(worst_kms)},
                      {"max_invariance_residual", short_str(worst_inv)}, {"tolerance", "1e-10"}};
    return report;
}

}  // namespace bcsys::cli
