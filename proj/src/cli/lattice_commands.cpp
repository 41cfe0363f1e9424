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

#include "bcsys/bcalg/duality.hpp"
#include "bcsys/cli/commands.hpp"
#include "bcsys/qlat1d/qlattice.hpp"
#include "bcsys/rng.hpp"

namespace bcsys::cli {

using numtower::make_rational;
using numtower::Rational;
using numtower::ResidueEndo;
using qlat1d::GroupoidPoint;
using qlat1d::QLattice1D;

namespace {

i64 pick_divisor(Rng& rng, i64 n) {
    const auto ds = numtower::divisors(n);
    return ds[static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(ds.size()) - 1))];
}

i64 coprime_to(Rng& rng, i64 q) {
    for (;;)
        if (const i64 p = rng.uniform(1, 12); numtower::gcd(p, q) == 1) return p;
}

QLattice1D random_lattice(Rng& rng, i64 level) {
    return {make_rational(rng.uniform(1, 12), rng.uniform(1, 12)), ResidueEndo(level, rng.uniform(0, level - 1))};
}

// (λ/r, rρ): one step along the groupoid, so commensurable with l by construction.
QLattice1D groupoid_move(Rng& rng, const QLattice1D& l) {
    const i64 g = numtower::gcd(l.rho().residue(), l.level());
    const i64 q = pick_divisor(rng, g == 0 ? l.level() : g);
    const GroupoidPoint p(make_rational(coprime_to(rng, q), q), l.rho());
    return qlat1d::eta(p).first.scaled(l.scale());
}

// Re-derives what a witness claims: coprime m, n with mλ₁ = nλ₂ and nρ₁ ≡ mρ₂.
bool witness_valid(const QLattice1D& a, const QLattice1D& b, const qlat1d::Witness& w) {
    if (w.m <= 0 || w.n <= 0 || numtower::gcd(w.m, w.n) != 1) return false;
    if (Rational(w.m) * a.scale() != Rational(w.n) * b.scale()) return false;
    const i64 g = numtower::gcd(a.level(), b.level());
    return numtower::mod(numtower::mulmod(w.n, a.rho().residue(), g) - numtower::mulmod(w.m, b.rho().residue(), g), g) == 0;
}

struct Tally {
    i64 samples = 0;
    i64 failures = 0;
    void note(bool ok) {
        ++samples;
        failures += ok ? 0 : 1;
    }
};

void add_tally(Report& report, const std::string& law, const Tally& t) {
    report.add(Json{{"law", law}, {"samples", t.samples}, {"failures", t.failures}}, t.failures == 0 && t.samples > 0);
}

}  // namespace

Report cmd_commensurability_check(const RunConfig& config, int samples) {
    Report report{"commensurability-check"};
    Rng rng(config.seed);
    Tally reflexive, symmetric, transitive, witnesses, round_trip;
    for (int i = 0; i < samples; ++i) {
        const QLattice1D a = random_lattice(rng, config.level), b = random_lattice(rng, config.level);
        const auto self = qlat1d::commensurability_witness(a, a);
        reflexive.note(self && witness_valid(a, a, *self));
        const auto ab = qlat1d::commensurability_witness(a, b), ba = qlat1d::commensurability_witness(b, a);
        symmetric.note(ab.has_value() == ba.has_value() && (!ab || *ba == qlat1d::Witness{ab->n, ab->m}));
        if (ab) witnesses.note(witness_valid(a, b, *ab));
        round_trip.note(qlat1d::same_lattice(qlat1d::lattice_from_json(Json(a)), a));
    }
    for (int i = 0; i < samples; ++i) {
        const QLattice1D l1 = random_lattice(rng, config.level);
        const QLattice1D l2 = groupoid_move(rng, l1);
        const QLattice1D l3 = groupoid_move(rng, l2);
        const auto w12 = qlat1d::commensurability_witness(l1, l2), w23 = qlat1d::commensurability_witness(l2, l3),
                   w13 = qlat1d::commensurability_witness(l1, l3);
        transitive.note(w12 && w23 && w13);
        for (const auto& [x, y, w] : {std::tuple{&l1, &l2, w12}, std::tuple{&l2, &l3, w23}, std::tuple{&l1, &l3, w13}})
            if (w) witnesses.note(witness_valid(*x, *y, *w));
    }
    add_tally(report, "reflexive", reflexive);
    add_tally(report, "symmetric", symmetric);
    add_tally(report, "transitive_chains", transitive);
    add_tally(report, "witness_valid", witnesses);
    add_tally(report, "json_round_trip", round_trip);
    report.summary = {{"level", config.level}, {"samples", samples}};
    return report;
}

Report cmd_groupoid_check(const RunConfig& config, int samples) {
    Report report{"groupoid-check"};
    Rng rng(config.seed);
    const i64 level = config.level;
    Tally assoc, source, target, eta;
    for (int i = 0; i < samples; ++i) {
        // ρ₃ = Qt with Q = q₁q₂q₃ | N, then ρ₂ = r₃ρ₃ and ρ₁ = r₂ρ₂: composable by construction.
        const i64 q3 = pick_divisor(rng, level);
        const i64 q2 = pick_divisor(rng, level / q3);
        const i64 q1 = pick_divisor(rng, level / (q3 * q2));
        const i64 p1 = coprime_to(rng, q1), p2 = coprime_to(rng, q2), p3 = coprime_to(rng, q3);
        const i64 rho3 = q1 * q2 * q3 * rng.uniform(0, level - 1);
        const i64 rho2 = rho3 / q3 * p3, rho1 = rho2 / q2 * p2;
        const GroupoidPoint g1(make_rational(p1, q1), ResidueEndo(level, rho1));
        const GroupoidPoint g2(make_rational(p2, q2), ResidueEndo(level, rho2));
        const GroupoidPoint g3(make_rational(p3, q3), ResidueEndo(level, rho3));
        const GroupoidPoint g12 = qlat1d::groupoid_compose(g1, g2);
        assoc.note(qlat1d::groupoid_compose(g12, g3) == qlat1d::groupoid_compose(g1, qlat1d::groupoid_compose(g2, g3)));
        source.note(g12.source() == g2.source());
        const i64 common = numtower::gcd(g12.target().level(), g1.target().level());
        target.note(g12.target().lower(common) == g1.target().lower(common));
        const auto e = qlat1d::eta(g12);
        eta.note(qlat1d::commensurable(e.first, e.second) && qlat1d::same_lattice(e.second, qlat1d::eta(g2).second));
    }
    add_tally(report, "associativity", assoc);
    add_tally(report, "source", source);
    add_tally(report, "target", target);
    add_tally(report, "eta_commensurable", eta);
    report.summary = {{"level", level}, {"samples", samples}};
    return report;
}

Report cmd_duality_check(const RunConfig&, i64 max_b) {
    Report report{"duality-check"};
    for (i64 b = 1; b <= max_b; ++b)
        for (i64 n = 1; n <= max_b; ++n) {
            const bool ok = bcalg::gelfand_square_check(n, b);
            report.add(Json{{"n", n}, {"b", b}, {"pass", ok}}, ok);
        }
    report.summary = {{"max_b", max_b}};
    return report;
}

}  // namespace bcsys::cli
