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

#ifndef CRPLA_CONFIG_HPP
#define CRPLA_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "crpla/energy.hpp"
#include "crpla/grid.hpp"
#include "crpla/policy.hpp"
#include "crpla/shadowing.hpp"

namespace crpla {

/// Invalid, malformed, or unknown configuration input. Distinct from runtime
/// failures so callers can map it to a dedicated exit status.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Detection-tradeoff sweep settings: attenuation ranges, target false-alarm
/// grid, and Monte Carlo trials per operating point.
struct DetConfig {
    std::vector<double> r_db{5.0, 10.0, 20.0, 40.0};
    std::vector<double> p_fa_grid{0.5, 0.36787944117144233, 0.1, 0.05, 0.01};
    long trials = 100000;
};

/// Episode simulation settings.
struct EpisodeConfig {
    int length = 100;
    int random_starts = 200;
    double attack_fraction = 0.0; // probability a round is an attack
};

/// Movement policy selection and hyperparameters. `gamma`, `tol`, and
/// `max_iters` drive the value-iteration solver; `window_l`, `delta`, and
/// `beta` drive the diversity-weighted heuristic.
struct PolicyConfig {
    PolicyKind kind = PolicyKind::bellman;
    double gamma = 0.95;
    double tol = 1e-6;
    int max_iters = 10000;
    int window_l = 5;
    double delta = 100.0;
    double beta = 20.0;
};

/// Full experiment description. Defaults reproduce the reference scenario:
/// a 50 x 50 m grid at 1 m spacing, drone plane 20 m up, 1.8 GHz carrier,
/// 6 dB shadowing with a 10-wavelength coherence distance, 10 quantizer
/// levels, and the multirotor energy model.
struct ExperimentConfig {
    GridSpec grid;
    double sigma_sh_db = 6.0;
    double d_coh_m = -1.0; // < 0: derive 10 wavelengths from the grid
    int num_levels = 10;
    EnergyModel energy;
    double p_fa = 0.05;
    PolicyConfig policy;
    EpisodeConfig episode;
    DetConfig det;
    std::uint64_t seed = 0;

    /// Coherence distance with the 10-wavelength default applied.
    double effective_d_coh_m() const;

    /// Throws ConfigError when any field is out of range.
    void validate() const;
};

/// Parse a JSON document into a config. Missing keys keep their defaults;
/// unknown keys anywhere are rejected. Throws ConfigError on malformed
/// JSON, unknown keys, wrong types, or out-of-range values.
ExperimentConfig parse_config_text(const std::string& json_text);

/// Read and parse a JSON config file. Throws ConfigError with the path on
/// unreadable files, otherwise as parse_config_text.
ExperimentConfig load_config(const std::filesystem::path& file);

/// Parse a policy selector: "bi", "pg", or "std". Throws ConfigError.
PolicyKind parse_policy_kind(const std::string& name);

} // namespace crpla

#endif // CRPLA_CONFIG_HPP
