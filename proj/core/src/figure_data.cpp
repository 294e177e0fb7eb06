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

#include "crpla/figure_data.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace crpla {

namespace {

std::ofstream open_csv(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open \"" + file.string() + "\" for writing");
    return out;
}

void finish_csv(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing \"" + file.string() + "\"");
}

const char* hypothesis_label(Hypothesis h) {
    return h == Hypothesis::legitimate ? "H0" : "H1";
}

const char* decision_label(Decision d) {
    return d == Decision::accept ? "accept" : "reject";
}

} // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (result.ec != std::errc())
        throw std::runtime_error("failed to format a floating-point value");
    return std::string(buffer, result.ptr);
}

void write_map_csv(const std::filesystem::path& file, const ChannelMap& map) {
    auto out = open_csv(file);
    out << "x_m,y_m,eta_db,quantized_db\n";
    for (int idx = 0; idx < map.size(); ++idx) {
        out << format_double(map.grid.x_of(idx)) << ',' << format_double(map.grid.y_of(idx)) << ','
            << format_double(map.eta_db[static_cast<std::size_t>(idx)]) << ','
            << format_double(map.quantized_db[static_cast<std::size_t>(idx)]) << '\n';
    }
    finish_csv(out, file);
}

void write_det_csv(const std::filesystem::path& file, const std::vector<DetCurve>& curves) {
    auto out = open_csv(file);
    out << "r_db,p_fa_target,p_fa_emp,p_md_analytic,p_md_emp,trials,seed\n";
    for (const auto& curve : curves) {
        for (const auto& point : curve.points) {
            out << format_double(curve.r_db) << ',' << format_double(point.p_fa_target) << ','
                << format_double(point.p_fa_empirical) << ','
                << format_double(analytic_pmd(curve.r_db, point.p_fa_target)) << ','
                << format_double(point.p_md_empirical) << ',' << curve.trials << ',' << curve.seed
                << '\n';
        }
    }
    finish_csv(out, file);
}

void write_policy_csv(const std::filesystem::path& file, const ChannelMap& map,
                      const PolicyTable& table) {
    if (!table.matches(map))
        throw std::runtime_error("policy table does not match the map while writing \"" +
                                 file.string() + "\"");
    auto out = open_csv(file);
    out << "challenge_db,from_x,from_y,to_x,to_y,value\n";
    for (int a = 0; a < table.num_challenges; ++a) {
        const double challenge = map.challenges_db[static_cast<std::size_t>(a)];
        for (int x = 0; x < table.num_positions; ++x) {
            const int to = table.next(x, a);
            const double value = table.values.empty() ? 0.0 : table.value(x, a);
            out << format_double(challenge) << ',' << format_double(map.grid.x_of(x)) << ','
                << format_double(map.grid.y_of(x)) << ',' << format_double(map.grid.x_of(to))
                << ',' << format_double(map.grid.y_of(to)) << ',' << format_double(value) << '\n';
        }
    }
    finish_csv(out, file);
}

void write_solver_log_csv(const std::filesystem::path& file, const PolicyTable& table) {
    auto out = open_csv(file);
    out << "iteration,max_delta\n";
    for (std::size_t i = 0; i < table.sweep_deltas.size(); ++i)
        out << (i + 1) << ',' << format_double(table.sweep_deltas[i]) << '\n';
    finish_csv(out, file);
}

void write_trace_csv(const std::filesystem::path& file, const GridSpec& grid,
                     const EpisodeTrace& trace) {
    auto out = open_csv(file);
    out << "t,challenge_db,from_x_m,from_y_m,to_x_m,to_y_m,energy_j,observed_db,hypothesis,"
           "decision\n";
    for (const auto& step : trace.steps) {
        out << step.t << ',' << format_double(step.challenge_db) << ','
            << format_double(grid.x_of(step.from)) << ',' << format_double(grid.y_of(step.from))
            << ',' << format_double(grid.x_of(step.to)) << ',' << format_double(grid.y_of(step.to))
            << ',' << format_double(step.energy_j) << ',' << format_double(step.observed_db) << ','
            << hypothesis_label(step.hypothesis) << ',' << decision_label(step.decision) << '\n';
    }
    finish_csv(out, file);
}

void write_trajectory_csv(const std::filesystem::path& file, const GridSpec& grid,
                          const std::vector<std::pair<PolicyKind, EpisodeTrace>>& traces) {
    auto out = open_csv(file);
    out << "policy,t,challenge_db,from_x,from_y,to_x,to_y,energy_j\n";
    for (const auto& [kind, trace] : traces) {
        const std::string label = to_string(kind);
        for (const auto& step : trace.steps) {
            out << label << ',' << step.t << ',' << format_double(step.challenge_db) << ','
                << format_double(grid.x_of(step.from)) << ','
                << format_double(grid.y_of(step.from)) << ',' << format_double(grid.x_of(step.to))
                << ',' << format_double(grid.y_of(step.to)) << ',' << format_double(step.energy_j)
                << '\n';
        }
    }
    finish_csv(out, file);
}

void write_energy_csv(const std::filesystem::path& file, const PolicyComparison& comparison) {
    auto out = open_csv(file);
    out << "policy,t,mean_energy_j,std_energy_j,n_starts\n";
    for (std::size_t p = 0; p < comparison.kinds.size(); ++p) {
        const std::string label = to_string(comparison.kinds[p]);
        for (int t = 1; t <= comparison.episode_length; ++t) {
            out << label << ',' << t << ','
                << format_double(comparison.mean_energy_j[p][static_cast<std::size_t>(t - 1)])
                << ','
                << format_double(comparison.std_energy_j[p][static_cast<std::size_t>(t - 1)])
                << ',' << comparison.num_starts << '\n';
        }
    }
    finish_csv(out, file);
}

} // namespace crpla
