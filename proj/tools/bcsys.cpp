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

// bcsys: command-line front end. Exit codes: 0 pass, 1 property failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "bcsys/cli/commands.hpp"
#include "bcsys/error.hpp"

namespace {

using namespace bcsys;
using namespace bcsys::cli;

constexpr int kUsage = 2;

struct Globals {
    RunConfig config;
    std::string format = "json";
    std::string trunc = "100000";
};

void add_globals(CLI::App& app, Globals& g) {
    app.add_option("--level", g.config.level, "Arithmetic level N")->envname("BCSYS_LEVEL")->capture_default_str();
    app.add_option("--precision", g.config.precision, "Working precision in bits")
        ->envname("BCSYS_PRECISION")
        ->check(CLI::Range(32L, 1L << 16))
        ->capture_default_str();
    app.add_option("--seed", g.config.seed, "Seed for every random choice")->envname("BCSYS_SEED")->capture_default_str();
    app.add_option("--trunc", g.trunc, "Truncation M, e.g. 100000 or 1e5")->envname("BCSYS_TRUNC")->capture_default_str();
    app.add_option("--format", g.format, "json or csv")
        ->envname("BCSYS_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.config.out_path, "Write the report here instead of stdout")->envname("BCSYS_OUT");
}

long parse_count(const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 1 || v > 1e12 || std::floor(v) != v)
        throw Error(ErrorKind::InvalidArgument, "--trunc expects a positive integer, got '" + text + "'");
    return static_cast<long>(v);
}

std::vector<kms::Beta> parse_betas(const std::vector<std::string>& texts) {
    std::vector<kms::Beta> out;
    for (const auto& t : texts) out.push_back(kms::Beta::parse(t));
    return out;
}

bool is_usage_error(ErrorKind k) {
    return k == ErrorKind::InvalidArgument || k == ErrorKind::DomainError || k == ErrorKind::NonInvertible ||
           k == ErrorKind::LevelMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-level BC and GL2 systems: relations, KMS states, Galois action, Hecke cosets"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    add_globals(app, g);

    // Each subcommand stores a job; it runs after parsing so that usage errors never half-run.
    std::function<Report(const RunConfig&)> job;

    auto* relations = app.add_subcommand("bc-relations", "Check the defining relations exactly at the configured level");
    bool corrupt = false;
    relations->add_flag("--corrupt-generator", corrupt, "Negative control")->group("");
    relations->callback([&] { job = [&](const RunConfig& c) { return cmd_bc_relations(c, corrupt); }; });

    auto* kms_eval = app.add_subcommand("kms-eval", "Evaluate extremal KMS states on e(a/b)");
    std::vector<std::string> eval_betas{"2"}, elements{"1/2"};
    long iota = 1;
    kms_eval->add_option("--beta", eval_betas, "Comma-separated; inf allowed")->delimiter(',')->envname("BCSYS_BETA")->capture_default_str();
    kms_eval->add_option("--element", elements, "a/b or upto:B, comma-separated")->delimiter(',')->envname("BCSYS_ELEMENT")->capture_default_str();
    kms_eval->add_option("--iota", iota, "Embedding exponent u")->envname("BCSYS_IOTA")->capture_default_str();
    kms_eval->callback([&] {
        job = [&](const RunConfig& c) { return cmd_kms_eval(c, parse_betas(eval_betas), parse_elements(elements), iota); };
    });

    auto* high = app.add_subcommand("high-temp-check", "Closed-form checks of the high-temperature state");
    long high_max_b = 12;
    high->add_option("--max-b", high_max_b)->check(CLI::PositiveNumber)->capture_default_str();
    high->callback([&] { job = [&](const RunConfig& c) { return cmd_high_temp_check(c, high_max_b); }; });

    auto* low = app.add_subcommand("low-temp-check", "Three-way agreement of the low-temperature state");
    std::string low_beta = "2";
    std::vector<long> low_bs{2, 3, 5};
    low->add_option("--beta", low_beta)->envname("BCSYS_BETA")->capture_default_str();
    low->add_option("-b,--conductor", low_bs, "Comma-separated conductors")->delimiter(',')->check(CLI::PositiveNumber)->capture_default_str();
    low->callback([&] {
        job = [&](const RunConfig& c) {
            return cmd_low_temp_check(c, kms::Beta::parse(low_beta), std::vector<i64>(low_bs.begin(), low_bs.end()));
        };
    });

    auto* partition = app.add_subcommand("partition", "Truncated partition function with its tail bound");
    std::string part_beta = "2";
    partition->add_option("--beta", part_beta)->envname("BCSYS_BETA")->capture_default_str();
    partition->callback([&] { job = [&](const RunConfig& c) { return cmd_partition(c, kms::Beta::parse(part_beta)); }; });

    auto* galois = app.add_subcommand("galois-verify", "Galois intertwining over every unit");
    std::vector<long> gal_bs{5};
    std::vector<std::string> gal_betas{"inf"};
    long gal_iota = 1;
    galois->add_option("-b,--conductor", gal_bs, "Comma-separated conductors")->delimiter(',')->check(CLI::PositiveNumber)->capture_default_str();
    galois->add_option("--beta", gal_betas, "Comma-separated; inf allowed")->delimiter(',')->envname("BCSYS_BETA")->capture_default_str();
    galois->add_option("--iota", gal_iota)->envname("BCSYS_IOTA")->capture_default_str();
    galois->callback([&] {
        job = [&](const RunConfig& c) {
            return cmd_galois_verify(c, std::vector<i64>(gal_bs.begin(), gal_bs.end()), parse_betas(gal_betas), gal_iota);
        };
    });

    auto* gibbs = app.add_subcommand("gibbs-check", "KMS boundary and invariance residuals of a finite Gibbs state");
    std::size_t dim = 4;
    int pairs = 20;
    std::vector<std::string> gibbs_betas{"0.5", "1", "2"};
    bool non_gibbs = false;
    gibbs->add_option("--dim", dim)->check(CLI::Range(1, 64))->capture_default_str();
    gibbs->add_option("--beta", gibbs_betas)->delimiter(',')->envname("BCSYS_BETA")->capture_default_str();
    gibbs->add_option("--pairs", pairs)->check(CLI::PositiveNumber)->capture_default_str();
    gibbs->add_flag("--non-gibbs", non_gibbs, "Negative control")->group("");
    gibbs->callback([&] {
        job = [&](const RunConfig& c) { return cmd_gibbs_check(c, dim, parse_betas(gibbs_betas), pairs, non_gibbs); };
    });

    auto* comm = app.add_subcommand("commensurability-check", "Laws of commensurability on seeded samples");
    int comm_samples = 1000;
    comm->add_option("--samples", comm_samples)->check(CLI::PositiveNumber)->capture_default_str();
    comm->callback([&] { job = [&](const RunConfig& c) { return cmd_commensurability_check(c, comm_samples); }; });

    auto* groupoid = app.add_subcommand("groupoid-check", "Groupoid laws and eta on seeded composable triples");
    int groupoid_samples = 1000;
    groupoid->add_option("--samples", groupoid_samples)->check(CLI::PositiveNumber)->capture_default_str();
    groupoid->callback([&] { job = [&](const RunConfig& c) { return cmd_groupoid_check(c, groupoid_samples); }; });

    auto* duality = app.add_subcommand("duality-check", "The Gelfand duality square");
    long dual_max_b = 12;
    duality->add_option("--max-b", dual_max_b)->check(CLI::PositiveNumber)->capture_default_str();
    duality->callback([&] { job = [&](const RunConfig& c) { return cmd_duality_check(c, dual_max_b); }; });

    auto* gl2 = app.add_subcommand("gl2", "GL2 computations");
    gl2->require_subcommand(1);
    long max_n = 50, det_bound = 6;
    int trials = 20, fiber_samples = 1000;
    auto* hecke = gl2->add_subcommand("hecke", "Coset tables for determinant n");
    hecke->add_option("--max-n", max_n)->check(CLI::PositiveNumber)->capture_default_str();
    hecke->callback([&] { job = [&](const RunConfig& c) { return cmd_gl2_hecke(c, max_n); }; });
    auto* conv = gl2->add_subcommand("conv-check", "Convolution, involution and time-evolution laws");
    conv->add_option("--det-bound", det_bound)->check(CLI::PositiveNumber)->capture_default_str();
    conv->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
    conv->callback([&] { job = [&](const RunConfig& c) { return cmd_gl2_conv_check(c, det_bound, trials); }; });
    auto* fiber = gl2->add_subcommand("fiber-check", "The C* fiber over i");
    fiber->add_option("--samples", fiber_samples)->check(CLI::PositiveNumber)->capture_default_str();
    fiber->callback([&] { job = [&](const RunConfig& c) { return cmd_gl2_fiber_check(c, fiber_samples); }; });
    auto* all = gl2->add_subcommand("all", "hecke, conv-check and fiber-check in one report");
    all->add_option("--max-n", max_n)->check(CLI::PositiveNumber)->capture_default_str();
    all->add_option("--det-bound", det_bound)->check(CLI::PositiveNumber)->capture_default_str();
    all->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
    all->add_option("--samples", fiber_samples)->check(CLI::PositiveNumber)->capture_default_str();
    all->callback([&] {
        job = [&](const RunConfig& c) {
            Report combined("gl2-all");
            for (Report part : {cmd_gl2_hecke(c, max_n), cmd_gl2_conv_check(c, det_bound, trials), cmd_gl2_fiber_check(c, fiber_samples)}) {
                for (auto& row : part.rows) {
                    Json tagged{{"part", part.command}};
                    tagged.update(row);
                    combined.rows.push_back(std::move(tagged));
                }
                combined.summary[part.command] = part.summary;
                combined.pass = combined.pass && part.pass;
            }
            return combined;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        RunConfig config = g.config;
        config.format = parse_format(g.format);
        config.truncation = parse_count(g.trunc);
        if (config.level < 1) throw Error(ErrorKind::InvalidArgument, "--level must be positive");
        const Report report = job(config);
        emit(report, config);
        return report.pass ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "bcsys: " << e.what() << '\n';
        return is_usage_error(e.kind()) ? kUsage : 1;
    } catch (const std::exception& e) {
        std::cerr << "bcsys: " << e.what() << '\n';
        return 1;
    }
}
