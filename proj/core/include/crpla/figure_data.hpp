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

#ifndef CRPLA_FIGURE_DATA_HPP
#define CRPLA_FIGURE_DATA_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "crpla/auth.hpp"
#include "crpla/channel_map.hpp"
#include "crpla/episode.hpp"
#include "crpla/policy.hpp"

namespace crpla {

/// Shortest decimal representation that round-trips the value exactly.
/// Used for every floating-point CSV field so reruns are byte-identical.
std::string format_double(double value);

/// One detection-tradeoff curve: all operating points simulated at a fixed
/// attenuation range with a fixed seed.
struct DetCurve {
    double r_db = 0.0;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<DetPoint> points;
};

/// Channel realization: header x_m,y_m,eta_db,quantized_db, one row per grid
/// position in row-major order.
void write_map_csv(const std::filesystem::path& file, const ChannelMap& map);

/// Detection curves: header
/// r_db,p_fa_target,p_fa_emp,p_md_analytic,p_md_emp,trials,seed.
void write_det_csv(const std::filesystem::path& file, const std::vector<DetCurve>& curves);

/// Policy dump: header challenge_db,from_x,from_y,to_x,to_y,value with
/// coordinates in metres; value is 0 for tables without a value function.
void write_policy_csv(const std::filesystem::path& file, const ChannelMap& map,
                      const PolicyTable& table);

/// Solver convergence log: header iteration,max_delta.
void write_solver_log_csv(const std::filesystem::path& file, const PolicyTable& table);

/// Episode trace: header
/// t,challenge_db,from_x_m,from_y_m,to_x_m,to_y_m,energy_j,observed_db,hypothesis,decision
/// with hypothesis H0/H1 and decision accept/reject.
void write_trace_csv(const std::filesystem::path& file, const GridSpec& grid,
                     const EpisodeTrace& trace);

/// Trajectories from a shared start, one block per policy: header
/// policy,t,challenge_db,from_x,from_y,to_x,to_y,energy_j.
void write_trajectory_csv(const std::filesystem::path& file, const GridSpec& grid,
                          const std::vector<std::pair<PolicyKind, EpisodeTrace>>& traces);

/// Per-step energy statistics: header
/// policy,t,mean_energy_j,std_energy_j,n_starts.
void write_energy_csv(const std::filesystem::path& file, const PolicyComparison& comparison);

} // namespace crpla

#endif // CRPLA_FIGURE_DATA_HPP
