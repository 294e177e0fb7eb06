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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "crpla/channel_map.hpp"
#include "crpla/config.hpp"
#include "crpla/episode.hpp"
#include "crpla/figure_data.hpp"
#include "crpla/map_io.hpp"
#include "crpla/policy.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", args.seed, "Master seed (overrides the config)");
    cmd->add_option("--out", args.out_dir, "Output directory (created if missing)");
}

crpla::ExperimentConfig resolve_config(const CommonArgs& args) {
    crpla::ExperimentConfig cfg;
    if (!args.config_path.empty()) cfg = crpla::load_config(args.config_path);
    if (args.seed) cfg.seed = *args.seed;
    cfg.validate();
    return cfg;
}

fs::path prepare_out_dir(const CommonArgs& args) {
    fs::path out(args.out_dir);
    fs::create_directories(out);
    return out;
}

crpla::ChannelMap build_map(const crpla::ExperimentConfig& cfg) {
    crpla::ShadowingParams params;
    params.sigma_sh_db = cfg.sigma_sh_db;
    params.d_coh_m = cfg.effective_d_coh_m();
    params.seed = crpla::derive_seed(cfg.seed, "map");
    return crpla::build_channel_map(cfg.grid, params, cfg.num_levels);
}

crpla::PolicyFn make_policy_fn(const crpla::ExperimentConfig& cfg, const crpla::ChannelMap& map,
                               std::optional<crpla::PolicyTable>& table,
                               std::optional<crpla::StrategicField>& field) {
    switch (cfg.policy.kind) {
        case crpla::PolicyKind::bellman:
            table = crpla::solve_value_iteration(map, cfg.energy, cfg.policy.gamma, cfg.policy.tol,
                                                 cfg.policy.max_iters);
            return [&map, &table](int current, double challenge_db, int) {
                return table->next(current, map.class_index_of(challenge_db));
            };
        case crpla::PolicyKind::greedy:
            return [&map, &cfg](int current, double challenge_db, int) {
                return crpla::greedy_next(current, challenge_db, map, cfg.energy);
            };
        case crpla::PolicyKind::decaying_std:
            field = crpla::strategic_field(map, cfg.policy.window_l, cfg.policy.delta,
                                           cfg.policy.beta);
            return [&map, &cfg, &field](int current, double challenge_db, int t) {
                return crpla::std_next(current, challenge_db, t, *field, map, cfg.energy);
            };
    }
    throw std::logic_error("unreachable policy kind");
}

void run_gen_map(const CommonArgs& args) {
    const auto cfg = resolve_config(args);
    const auto out = prepare_out_dir(args);
    const auto map = build_map(cfg);
    crpla::save_channel_map(map, (out / "map.bin").string());
    crpla::write_map_csv(out / "map.csv", map);
    std::cout << "wrote " << (out / "map.bin").string() << " and " << (out / "map.csv").string()
              << " (" << map.size() << " positions, " << map.num_challenges() << " challenges)\n";
}

void run_det(const CommonArgs& args) {
    const auto cfg = resolve_config(args);
    const auto out = prepare_out_dir(args);
    std::vector<crpla::DetCurve> curves;
    curves.reserve(cfg.det.r_db.size());
    for (std::size_t i = 0; i < cfg.det.r_db.size(); ++i) {
        crpla::DetCurve curve;
        curve.r_db = cfg.det.r_db[i];
        curve.trials = cfg.det.trials;
        curve.seed = crpla::derive_seed(cfg.seed, "det", static_cast<std::uint64_t>(i));
        auto rng = crpla::make_engine(curve.seed);
        curve.points = crpla::simulate_det(curve.r_db, cfg.det.p_fa_grid, cfg.det.trials, rng);
        curves.push_back(std::move(curve));
    }
    crpla::write_det_csv(out / "det.csv", curves);
    std::cout << "wrote " << (out / "det.csv").string() << " (" << curves.size() << " curves)\n";
}

void run_solve(const CommonArgs& args, const std::string& policy_name) {
    auto cfg = resolve_config(args);
    if (!policy_name.empty()) cfg.policy.kind = crpla::parse_policy_kind(policy_name);
    const auto out = prepare_out_dir(args);
    const auto map = build_map(cfg);

    crpla::PolicyTable table;
    switch (cfg.policy.kind) {
        case crpla::PolicyKind::bellman:
            table = crpla::solve_value_iteration(map, cfg.energy, cfg.policy.gamma, cfg.policy.tol,
                                                 cfg.policy.max_iters);
            crpla::write_solver_log_csv(out / "solver_log.csv", table);
            break;
        case crpla::PolicyKind::greedy:
            table = crpla::make_greedy_table(map, cfg.energy);
            break;
        case crpla::PolicyKind::decaying_std: {
            const auto field = crpla::strategic_field(map, cfg.policy.window_l, cfg.policy.delta,
                                                      cfg.policy.beta);
            table = crpla::make_std_table(map, cfg.energy, field, 0);
            break;
        }
    }
    const fs::path policy_file = out / ("policy_" + crpla::to_string(cfg.policy.kind) + ".csv");
    crpla::write_policy_csv(policy_file, map, table);
    std::cout << "wrote " << policy_file.string();
    if (cfg.policy.kind == crpla::PolicyKind::bellman)
        std::cout << " and " << (out / "solver_log.csv").string() << " ("
                  << table.iterations_used << " sweeps)";
    std::cout << '\n';
}

void run_simulate(const CommonArgs& args) {
    const auto cfg = resolve_config(args);
    const auto out = prepare_out_dir(args);
    const auto map = build_map(cfg);
    const auto verifier = crpla::VerifierConfig::from_p_fa(cfg.p_fa);

    std::optional<crpla::PolicyTable> table;
    std::optional<crpla::StrategicField> field;
    const auto policy = make_policy_fn(cfg, map, table, field);

    std::vector<crpla::Hypothesis> schedule(static_cast<std::size_t>(cfg.episode.length),
                                            crpla::Hypothesis::legitimate);
    {
        auto attack_rng = crpla::make_engine(crpla::derive_seed(cfg.seed, "attacks"));
        std::bernoulli_distribution is_attack(cfg.episode.attack_fraction);
        for (auto& h : schedule)
            if (is_attack(attack_rng)) h = crpla::Hypothesis::attack;
    }

    auto rng = crpla::make_engine(crpla::derive_seed(cfg.seed, "episode", 0));
    const int start = crpla::draw_start(map, rng);
    const auto trace = crpla::run_episode(map, cfg.energy, verifier, policy, cfg.episode.length,
                                          start, rng, schedule);
    crpla::write_trace_csv(out / "trace.csv", cfg.grid, trace);
    std::cout << "wrote " << (out / "trace.csv").string() << " (" << trace.steps.size()
              << " rounds, " << trace.accept_count() << " accepted, total energy "
              << crpla::format_double(trace.total_energy_j()) << " J)\n";
}

void run_compare(const CommonArgs& args) {
    const auto cfg = resolve_config(args);
    const auto out = prepare_out_dir(args);
    const auto map = build_map(cfg);
    const auto verifier = crpla::VerifierConfig::from_p_fa(cfg.p_fa);

    const auto table = crpla::solve_value_iteration(map, cfg.energy, cfg.policy.gamma,
                                                    cfg.policy.tol, cfg.policy.max_iters);
    const auto field =
        crpla::strategic_field(map, cfg.policy.window_l, cfg.policy.delta, cfg.policy.beta);

    const auto comparison =
        crpla::compare_policies(map, cfg.energy, verifier, table, field, cfg.episode.length,
                                cfg.episode.random_starts, cfg.seed);
    crpla::write_energy_csv(out / "energy_vs_t.csv", comparison);

    // Trajectories from one shared start under common random numbers.
    const auto traj_seed = crpla::derive_seed(cfg.seed, "trajectory");
    std::vector<std::pair<crpla::PolicyKind, crpla::EpisodeTrace>> traces;
    const std::vector<std::pair<crpla::PolicyKind, crpla::PolicyFn>> policies = {
        {crpla::PolicyKind::bellman,
         [&map, &table](int current, double challenge_db, int) {
             return table.next(current, map.class_index_of(challenge_db));
         }},
        {crpla::PolicyKind::decaying_std,
         [&map, &cfg, &field](int current, double challenge_db, int t) {
             return crpla::std_next(current, challenge_db, t, field, map, cfg.energy);
         }},
        {crpla::PolicyKind::greedy, [&map, &cfg](int current, double challenge_db, int) {
             return crpla::greedy_next(current, challenge_db, map, cfg.energy);
         }}};
    for (const auto& [kind, fn] : policies) {
        auto rng = crpla::make_engine(traj_seed);
        const int start = crpla::draw_start(map, rng);
        traces.emplace_back(kind, crpla::run_episode(map, cfg.energy, verifier, fn,
                                                     cfg.episode.length, start, rng));
    }
    crpla::write_trajectory_csv(out / "trajectories.csv", cfg.grid, traces);
    std::cout << "wrote " << (out / "energy_vs_t.csv").string() << " and "
              << (out / "trajectories.csv").string() << " (" << comparison.num_starts
              << " starts, " << comparison.episode_length << " rounds)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"challenge-response physical-layer authentication simulator"};
    app.require_subcommand(1);

    CommonArgs gen_map_args, det_args, solve_args, simulate_args, compare_args;
    std::string solve_policy;

    auto* gen_map = app.add_subcommand("gen-map", "Synthesize a channel map (map.bin, map.csv)");
    add_common(gen_map, gen_map_args);

    auto* det = app.add_subcommand("det", "Simulate detection tradeoff curves (det.csv)");
    add_common(det, det_args);

    auto* solve = app.add_subcommand("solve", "Compute a movement policy (policy_<kind>.csv)");
    add_common(solve, solve_args);
    solve->add_option("--policy", solve_policy, "Policy kind: bi, pg, or std")
        ->check(CLI::IsMember({"bi", "pg", "std"}));

    auto* simulate = app.add_subcommand("simulate", "Run one verification episode (trace.csv)");
    add_common(simulate, simulate_args);

    auto* compare = app.add_subcommand(
        "compare", "Compare policies under common random numbers (energy_vs_t.csv, "
                   "trajectories.csv)");
    add_common(compare, compare_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen_map->parsed()) run_gen_map(gen_map_args);
        if (det->parsed()) run_det(det_args);
        if (solve->parsed()) run_solve(solve_args, solve_policy);
        if (simulate->parsed()) run_simulate(simulate_args);
        if (compare->parsed()) run_compare(compare_args);
    } catch (const crpla::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
