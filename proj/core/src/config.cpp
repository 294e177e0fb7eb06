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

#include "crpla/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

namespace crpla {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& scope) {
    if (!j.is_object())
        throw ConfigError("config: " + scope + " must be a JSON object");
}

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         const std::string& scope) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto name : allowed)
            if (item.key() == name) {
                known = true;
                break;
            }
        if (!known)
            throw ConfigError("config: unknown key \"" + item.key() + "\" in " + scope);
    }
}

double get_number(const json& j, const char* key, double fallback, const std::string& scope) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ConfigError("config: " + scope + "." + key + " must be a number");
    return v.get<double>();
}

int get_int(const json& j, const char* key, int fallback, const std::string& scope) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ConfigError("config: " + scope + "." + key + " must be an integer");
    return v.get<int>();
}

long get_long(const json& j, const char* key, long fallback, const std::string& scope) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ConfigError("config: " + scope + "." + key + " must be an integer");
    return v.get<long>();
}

std::vector<double> get_number_array(const json& j, const char* key,
                                     const std::vector<double>& fallback,
                                     const std::string& scope) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_array())
        throw ConfigError("config: " + scope + "." + key + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw ConfigError("config: " + scope + "." + key + " must be an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

void parse_grid(const json& j, GridSpec& grid) {
    require_object(j, "grid");
    reject_unknown_keys(j, {"n1", "n2", "step_m", "height_m", "carrier_freq_hz"}, "grid");
    grid.n1 = get_int(j, "n1", grid.n1, "grid");
    grid.n2 = get_int(j, "n2", grid.n2, "grid");
    grid.step_m = get_number(j, "step_m", grid.step_m, "grid");
    grid.height_m = get_number(j, "height_m", grid.height_m, "grid");
    grid.carrier_freq_hz = get_number(j, "carrier_freq_hz", grid.carrier_freq_hz, "grid");
}

void parse_shadowing(const json& j, ExperimentConfig& cfg) {
    require_object(j, "shadowing");
    reject_unknown_keys(j, {"sigma_sh_db", "d_coh_m"}, "shadowing");
    cfg.sigma_sh_db = get_number(j, "sigma_sh_db", cfg.sigma_sh_db, "shadowing");
    cfg.d_coh_m = get_number(j, "d_coh_m", cfg.d_coh_m, "shadowing");
}

void parse_quantizer(const json& j, ExperimentConfig& cfg) {
    require_object(j, "quantizer");
    reject_unknown_keys(j, {"num_levels"}, "quantizer");
    cfg.num_levels = get_int(j, "num_levels", cfg.num_levels, "quantizer");
}

void parse_energy(const json& j, EnergyModel& model) {
    require_object(j, "energy");
    reject_unknown_keys(j, {"alpha1_j_per_s", "alpha0_j", "velocity_m_per_s"}, "energy");
    model.alpha1_j_per_s = get_number(j, "alpha1_j_per_s", model.alpha1_j_per_s, "energy");
    model.alpha0_j = get_number(j, "alpha0_j", model.alpha0_j, "energy");
    model.velocity_m_per_s = get_number(j, "velocity_m_per_s", model.velocity_m_per_s, "energy");
}

void parse_verifier(const json& j, ExperimentConfig& cfg) {
    require_object(j, "verifier");
    reject_unknown_keys(j, {"p_fa"}, "verifier");
    cfg.p_fa = get_number(j, "p_fa", cfg.p_fa, "verifier");
}

void parse_policy(const json& j, PolicyConfig& policy) {
    require_object(j, "policy");
    reject_unknown_keys(j, {"kind", "gamma", "tol", "max_iters", "window_l", "delta", "beta"},
                        "policy");
    if (j.contains("kind")) {
        const auto& v = j.at("kind");
        if (!v.is_string())
            throw ConfigError("config: policy.kind must be a string (bi, pg, or std)");
        policy.kind = parse_policy_kind(v.get<std::string>());
    }
    policy.gamma = get_number(j, "gamma", policy.gamma, "policy");
    policy.tol = get_number(j, "tol", policy.tol, "policy");
    policy.max_iters = get_int(j, "max_iters", policy.max_iters, "policy");
    policy.window_l = get_int(j, "window_l", policy.window_l, "policy");
    policy.delta = get_number(j, "delta", policy.delta, "policy");
    policy.beta = get_number(j, "beta", policy.beta, "policy");
}

void parse_episode(const json& j, EpisodeConfig& episode) {
    require_object(j, "episode");
    reject_unknown_keys(j, {"length", "random_starts", "attack_fraction"}, "episode");
    episode.length = get_int(j, "length", episode.length, "episode");
    episode.random_starts = get_int(j, "random_starts", episode.random_starts, "episode");
    episode.attack_fraction = get_number(j, "attack_fraction", episode.attack_fraction, "episode");
}

void parse_det(const json& j, DetConfig& det) {
    require_object(j, "det");
    reject_unknown_keys(j, {"r_db", "p_fa_grid", "trials"}, "det");
    det.r_db = get_number_array(j, "r_db", det.r_db, "det");
    det.p_fa_grid = get_number_array(j, "p_fa_grid", det.p_fa_grid, "det");
    det.trials = get_long(j, "trials", det.trials, "det");
}

} // namespace

double ExperimentConfig::effective_d_coh_m() const {
    return d_coh_m > 0.0 ? d_coh_m : default_d_coh_m(grid);
}

void ExperimentConfig::validate() const {
    try {
        grid.validate();
        ShadowingParams sh;
        sh.sigma_sh_db = sigma_sh_db;
        sh.d_coh_m = effective_d_coh_m();
        sh.validate();
        energy.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (num_levels < 2)
        throw ConfigError("config: quantizer.num_levels must be >= 2");
    if (!(p_fa > 0.0 && p_fa < 1.0))
        throw ConfigError("config: verifier.p_fa must lie in (0, 1)");
    if (!(policy.gamma > 0.0 && policy.gamma < 1.0))
        throw ConfigError("config: policy.gamma must lie in (0, 1)");
    if (!(policy.tol > 0.0))
        throw ConfigError("config: policy.tol must be positive");
    if (policy.max_iters < 1)
        throw ConfigError("config: policy.max_iters must be >= 1");
    if (policy.window_l < 1 || policy.window_l % 2 == 0)
        throw ConfigError("config: policy.window_l must be an odd count >= 1");
    if (!(policy.delta >= 0.0))
        throw ConfigError("config: policy.delta must be non-negative");
    if (!(policy.beta > 0.0))
        throw ConfigError("config: policy.beta must be positive");
    if (episode.length < 1)
        throw ConfigError("config: episode.length must be >= 1");
    if (episode.random_starts < 1)
        throw ConfigError("config: episode.random_starts must be >= 1");
    if (!(episode.attack_fraction >= 0.0 && episode.attack_fraction <= 1.0))
        throw ConfigError("config: episode.attack_fraction must lie in [0, 1]");
    if (det.r_db.empty())
        throw ConfigError("config: det.r_db must not be empty");
    for (double r : det.r_db)
        if (!(r > 0.0))
            throw ConfigError("config: det.r_db entries must be positive");
    if (det.p_fa_grid.empty())
        throw ConfigError("config: det.p_fa_grid must not be empty");
    for (double p : det.p_fa_grid)
        if (!(p > 0.0 && p < 1.0))
            throw ConfigError("config: det.p_fa_grid entries must lie in (0, 1)");
    if (det.trials < 1)
        throw ConfigError("config: det.trials must be >= 1");
}

ExperimentConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    require_object(j, "the top level");
    reject_unknown_keys(j,
                        {"seed", "grid", "shadowing", "quantizer", "energy", "verifier", "policy",
                         "episode", "det"},
                        "the top level");

    ExperimentConfig cfg;
    if (j.contains("seed")) {
        const auto& v = j.at("seed");
        if (!v.is_number_unsigned())
            throw ConfigError("config: seed must be a non-negative integer");
        cfg.seed = v.get<std::uint64_t>();
    }
    if (j.contains("grid")) parse_grid(j.at("grid"), cfg.grid);
    if (j.contains("shadowing")) parse_shadowing(j.at("shadowing"), cfg);
    if (j.contains("quantizer")) parse_quantizer(j.at("quantizer"), cfg);
    if (j.contains("energy")) parse_energy(j.at("energy"), cfg.energy);
    if (j.contains("verifier")) parse_verifier(j.at("verifier"), cfg);
    if (j.contains("policy")) parse_policy(j.at("policy"), cfg.policy);
    if (j.contains("episode")) parse_episode(j.at("episode"), cfg.episode);
    if (j.contains("det")) parse_det(j.at("det"), cfg.det);

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError("config: cannot open \"" + file.string() + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw ConfigError("config: failed reading \"" + file.string() + "\"");
    return parse_config_text(buffer.str());
}

PolicyKind parse_policy_kind(const std::string& name) {
    if (name == "bi") return PolicyKind::bellman;
    if (name == "pg") return PolicyKind::greedy;
    if (name == "std") return PolicyKind::decaying_std;
    throw ConfigError("config: unknown policy kind \"" + name + "\" (expected bi, pg, or std)");
}

} // namespace crpla
