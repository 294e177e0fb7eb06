// SPDX-License-Identifier: Apache-2.0
//
// crpla: challenge-response physical-layer authentication simulator
// Copyright (C) 2026 crpla project contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// End-to-end acceptance suite. Each test prints one PASS/FAIL line with the
// measured figures, then asserts. The whole suite runs on one core in a few
// minutes; the slowest step is the full-scale dynamic-programming solve.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crpla/channel_map.hpp"
#include "crpla/config.hpp"
#include "crpla/episode.hpp"
#include "crpla/figure_data.hpp"
#include "crpla/policy.hpp"
#include "crpla/shadowing.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMasterSeed = 2026;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "ACCEPTANCE " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL")
              << " - " << detail << std::endl;
}

/// The reference scenario: 50 x 50 positions at 1 m, plane 20 m up, 1.8 GHz,
/// 6 dB shadowing with a ten-wavelength coherence distance, 10 levels.
const crpla::ChannelMap& reference_map() {
    static const crpla::ChannelMap map = [] {
        crpla::GridSpec grid;
        crpla::ShadowingParams params;
        params.sigma_sh_db = 6.0;
        params.d_coh_m = crpla::default_d_coh_m(grid);
        params.seed = crpla::derive_seed(kMasterSeed, "map");
        return crpla::build_channel_map(grid, params, 10);
    }();
    return map;
}

const crpla::PolicyTable& reference_table() {
    static const crpla::PolicyTable table =
        crpla::solve_value_iteration(reference_map(), crpla::EnergyModel{}, 0.95, 1e-6, 10000);
    return table;
}

crpla::ChannelMap random_small_map(int n1, int n2, int num_levels, std::uint64_t seed) {
    crpla::GridSpec grid;
    grid.n1 = n1;
    grid.n2 = n2;
    auto rng = crpla::make_engine(seed);
    std::uniform_real_distribution<double> uniform(60.0, 100.0);
    std::vector<double> eta(static_cast<std::size_t>(grid.size()));
    for (auto& v : eta) v = uniform(rng);
    return crpla::quantize_channel_map(grid, std::move(eta), num_levels);
}

std::string read_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fmt(double v, int precision = 4) {
    std::ostringstream out;
    out.precision(precision);
    out << v;
    return out.str();
}

} // namespace

TEST_CASE("criterion 1: simulated detection curves match the analytic model") {
    const std::vector<double> r_grid{5.0, 10.0, 20.0, 40.0};
    const std::vector<double> p_fa_grid{0.5, 0.36787944117144233, 0.1, 0.05, 0.01};
    const long trials = 100000;

    bool pass = true;
    double worst_fa_z = 0.0;
    double worst_md_z = 0.0;
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        auto rng = crpla::make_engine(
            crpla::derive_seed(kMasterSeed, "det", static_cast<std::uint64_t>(i)));
        const auto points = crpla::simulate_det(r_grid[i], p_fa_grid, trials, rng);
        for (const auto& pt : points) {
            const double sigma_fa =
                std::sqrt(pt.p_fa_target * (1 - pt.p_fa_target) / trials);
            const double fa_z = std::abs(pt.p_fa_empirical - pt.p_fa_target) / sigma_fa;
            const double pmd = crpla::analytic_pmd(r_grid[i], pt.p_fa_target);
            const double sigma_md = std::sqrt(pmd * (1 - pmd) / trials);
            const double md_z = std::abs(pt.p_md_empirical - pmd) / sigma_md;
            worst_fa_z = std::max(worst_fa_z, fa_z);
            worst_md_z = std::max(worst_md_z, md_z);
            if (fa_z > 3.0 || md_z > 3.0) pass = false;
        }
    }
    report(1, "detection curves", pass,
           "20 operating points, 1e5 trials each; worst false-alarm deviation " +
               fmt(worst_fa_z) + " sigma, worst missed-detection deviation " + fmt(worst_md_z) +
               " sigma (bound 3)");
    REQUIRE(pass);
}

TEST_CASE("criterion 2: shadowing deviation and correlation at the coherence distance") {
    crpla::GridSpec grid; // reference dimensions
    crpla::ShadowingParams params;
    params.sigma_sh_db = 6.0;
    params.d_coh_m = crpla::default_d_coh_m(grid);
    const int seeds = 20;

    bool std_exact = true;
    double corr_sum = 0.0;
    for (int s = 0; s < seeds; ++s) {
        params.seed = crpla::derive_seed(kMasterSeed, "shadowing", static_cast<std::uint64_t>(s));
        const auto field = crpla::synthesize_shadowing(grid, params);
        if (std::abs(crpla::test::sample_std_of(field) - 6.0) > 1e-9) std_exact = false;
        corr_sum +=
            crpla::test::grid_autocorr_at(field, grid.n1, grid.n2, params.d_coh_m / grid.step_m);
    }
    const double mean_corr = corr_sum / seeds;
    const bool corr_ok = mean_corr >= 0.25 && mean_corr <= 0.50;
    const bool pass = std_exact && corr_ok;
    report(2, "shadowing fidelity", pass,
           std::string("sample deviation 6 dB exact over 20 seeds: ") +
               (std_exact ? "yes" : "NO") + "; mean correlation at the coherence distance " +
               fmt(mean_corr) + " (window [0.25, 0.50], target 0.368)");
    REQUIRE(pass);
}

TEST_CASE("criterion 3: dynamic-programming values match brute-force lookahead") {
    const double gamma = 0.95;
    const std::vector<std::pair<int, int>> dims{{3, 4}, {4, 3}, {2, 5}, {3, 3}, {2, 2},
                                                {5, 2}, {4, 2}, {2, 4}, {3, 2}, {2, 6}};
    bool pass = true;
    double worst_value_gap = 0.0;
    double worst_policy_gap = 0.0;
    for (std::size_t m = 0; m < dims.size(); ++m) {
        const auto map = random_small_map(dims[m].first, dims[m].second, 3,
                                          crpla::derive_seed(kMasterSeed, "oracle-map", m));
        const crpla::EnergyModel model;
        const auto table = crpla::solve_value_iteration(map, model, gamma, 1e-8, 50000);
        const int horizon = crpla::test::expectimax_horizon(map, model, gamma, 1e-4);
        const auto oracle = crpla::test::expectimax_values(map, model, gamma, horizon);

        for (int a = 0; a < map.num_challenges(); ++a) {
            for (int x = 0; x < map.size(); ++x) {
                const double ref = oracle[static_cast<std::size_t>(a) * map.size() + x];
                worst_value_gap = std::max(worst_value_gap, std::abs(table.value(x, a) - ref));

                // Policy agreement up to ties: the chosen move must score
                // within tolerance of the best move under the oracle values.
                double best_q = -1e300;
                double chosen_q = -1e300;
                const int chosen = table.next(x, a);
                for (int v : map.classes[static_cast<std::size_t>(a)]) {
                    double future = 0.0;
                    for (int a2 = 0; a2 < map.num_challenges(); ++a2)
                        future += oracle[static_cast<std::size_t>(a2) * map.size() + v];
                    const double q = -crpla::energy(x, v, model, map.grid) +
                                     gamma * future / map.num_challenges();
                    best_q = std::max(best_q, q);
                    if (v == chosen) chosen_q = q;
                }
                worst_policy_gap = std::max(worst_policy_gap, best_q - chosen_q);
            }
        }
    }
    pass = worst_value_gap <= 1e-3 && worst_policy_gap <= 1e-3;
    report(3, "value-iteration oracle", pass,
           "10 random maps (up to 12 positions, 3 challenges); worst value gap " +
               fmt(worst_value_gap, 3) + ", worst policy score gap " + fmt(worst_policy_gap, 3) +
               " (bound 1e-3)");
    REQUIRE(pass);
}

TEST_CASE("criterion 4: long-run policy energy ordering with common random numbers") {
    const auto& map = reference_map();
    const crpla::EnergyModel model;
    const auto verifier = crpla::VerifierConfig::from_p_fa(0.05);
    const auto& table = reference_table();
    const auto field = crpla::strategic_field(map, 5, 100.0, 20.0);

    const int length = 100;
    const int starts = 200;
    const auto cmp = crpla::compare_policies(map, model, verifier, table, field, length, starts,
                                             kMasterSeed);
    // Row order: value-iteration, diversity heuristic, greedy.
    const std::size_t bi = 0, heuristic = 1, pg = 2;

    // Per-start mean energy over the settled window t in [20, 100].
    const auto window_mean = [&](std::size_t p, int k) {
        double sum = 0.0;
        for (int t = 20; t <= length; ++t)
            sum += cmp.energy_j[p][static_cast<std::size_t>(k)][static_cast<std::size_t>(t - 1)];
        return sum / (length - 20 + 1);
    };

    // One-sided paired comparison at 95%: the mean gap minus 1.645 standard
    // errors must stay non-negative.
    const auto confirmed_nonneg = [&](const std::vector<double>& gaps, double& stat) {
        const double mean = crpla::test::mean_of(gaps);
        const double se =
            crpla::test::sample_std_of(gaps) / std::sqrt(static_cast<double>(gaps.size()));
        stat = mean - 1.645 * se;
        return stat >= 0.0;
    };

    std::vector<double> gap_pg_heuristic, gap_heuristic_bi, gap_bi_pg_first;
    for (int k = 0; k < starts; ++k) {
        gap_pg_heuristic.push_back(window_mean(pg, k) - window_mean(heuristic, k));
        gap_heuristic_bi.push_back(window_mean(heuristic, k) - window_mean(bi, k));
        gap_bi_pg_first.push_back(cmp.energy_j[bi][static_cast<std::size_t>(k)][0] -
                                  cmp.energy_j[pg][static_cast<std::size_t>(k)][0]);
    }
    double stat_pg_heuristic = 0.0, stat_heuristic_bi = 0.0, stat_first = 0.0;
    const bool ord_pg = confirmed_nonneg(gap_pg_heuristic, stat_pg_heuristic);
    const bool ord_bi = confirmed_nonneg(gap_heuristic_bi, stat_heuristic_bi);
    const bool ord_first = confirmed_nonneg(gap_bi_pg_first, stat_first);
    const bool pass = ord_pg && ord_bi && ord_first;

    report(4, "policy energy ordering", pass,
           "200 starts, settled window t in [20,100]: greedy minus heuristic 95% lower bound " +
               fmt(stat_pg_heuristic) + " J, heuristic minus optimal " + fmt(stat_heuristic_bi) +
               " J, first-step optimal minus greedy " + fmt(stat_first) +
               " J (all must be >= 0)");
    REQUIRE(pass);
}

TEST_CASE("criterion 5: per-query policies match exhaustive scans and converge") {
    const auto& map = reference_map();
    const crpla::EnergyModel model;
    const auto field = crpla::strategic_field(map, 5, 100.0, 20.0);

    auto rng = crpla::make_engine(crpla::derive_seed(kMasterSeed, "queries"));
    std::uniform_int_distribution<int> pos(0, map.size() - 1);
    std::uniform_int_distribution<int> cls(0, map.num_challenges() - 1);
    std::uniform_int_distribution<int> step(0, 300);

    int mismatches = 0;
    const int queries = 10000;
    for (int q = 0; q < queries; ++q) {
        const int x = pos(rng);
        const int a = cls(rng);
        const int t = step(rng);
        const double challenge = map.challenges_db[static_cast<std::size_t>(a)];
        const auto& members = map.classes[static_cast<std::size_t>(a)];
        if (crpla::greedy_next(x, challenge, map, model) !=
            crpla::test::scan_greedy(x, members, map, model))
            ++mismatches;
        if (crpla::std_next(x, challenge, t, field, map, model) !=
            crpla::test::scan_std(x, members, map, model, field.y, field.delta, field.beta, t))
            ++mismatches;
    }

    // Once the decayed bonus falls below the resolution floor, the
    // diversity rule must coincide with the greedy rule in every state.
    const int t_floor =
        static_cast<int>(std::ceil(field.beta * std::log(field.delta * field.max_y / 1e-9))) + 1;
    int disagreements = 0;
    for (int a = 0; a < map.num_challenges(); ++a) {
        const double challenge = map.challenges_db[static_cast<std::size_t>(a)];
        for (int x = 0; x < map.size(); ++x)
            if (crpla::std_next(x, challenge, t_floor, field, map, model) !=
                crpla::greedy_next(x, challenge, map, model))
                ++disagreements;
    }

    const bool pass = mismatches == 0 && disagreements == 0;
    report(5, "query policy oracles", pass,
           "10000 random queries: " + std::to_string(mismatches) +
               " scan mismatches; decayed heuristic vs greedy at step " +
               std::to_string(t_floor) + ": " + std::to_string(disagreements) +
               " disagreements over all states");
    REQUIRE(pass);
}

TEST_CASE("criterion 6: repeated command-line runs are byte-identical") {
#ifndef CRPLA_CLI_PATH
    report(6, "command-line determinism", false, "CLI binary not built");
    FAIL("the CLI target is required for this criterion");
#else
    const fs::path cli = CRPLA_CLI_PATH;
    REQUIRE(fs::exists(cli));
    const fs::path base = fs::temp_directory_path() / "crpla_acceptance_cli";
    fs::remove_all(base);
    fs::create_directories(base);

    const fs::path config = base / "config.json";
    {
        std::ofstream out(config);
        out << R"({
            "seed": 7,
            "grid": {"n1": 12, "n2": 12},
            "quantizer": {"num_levels": 4},
            "episode": {"length": 20, "random_starts": 10, "attack_fraction": 0.2},
            "det": {"trials": 2000}
        })";
    }

    const std::vector<std::string> commands{"gen-map", "det", "solve --policy bi",
                                            "solve --policy pg", "solve --policy std",
                                            "simulate", "compare"};
    bool pass = true;
    std::string detail;
    int files_checked = 0;
    for (int run = 0; run < 2; ++run) {
        const fs::path out_dir = base / ("run" + std::to_string(run));
        for (const auto& sub : commands) {
            const std::string cmd = "\"" + cli.string() + "\" " + sub + " --config \"" +
                                    config.string() + "\" --out \"" + out_dir.string() +
                                    "\" > /dev/null";
            const int rc = std::system(cmd.c_str());
            if (rc != 0) {
                pass = false;
                detail = "command \"" + sub + "\" exited with status " + std::to_string(rc);
            }
        }
    }
    if (pass) {
        for (const auto& entry : fs::directory_iterator(base / "run0")) {
            const auto name = entry.path().filename();
            const auto twin = base / "run1" / name;
            if (!fs::exists(twin) || read_file(entry.path()) != read_file(twin)) {
                pass = false;
                detail = "output " + name.string() + " differs between runs";
                break;
            }
            ++files_checked;
        }
        if (pass)
            detail = "7 subcommands, " + std::to_string(files_checked) +
                     " output files byte-identical across two runs";
    }
    fs::remove_all(base);
    report(6, "command-line determinism", pass, detail);
    REQUIRE(pass);
#endif
}
