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

#ifndef CRPLA_POLICY_HPP
#define CRPLA_POLICY_HPP

#include <string>
#include <vector>

#include "crpla/channel_map.hpp"
#include "crpla/energy.hpp"

namespace crpla {

/// MDP state: where the drone is and which attenuation it must realize next.
struct MdpState {
    int position = 0;
    double challenge_db = 0.0;
};

enum class PolicyKind { bellman, greedy, decaying_std };

std::string to_string(PolicyKind kind);

/// Solved state -> next-position table. Entries are indexed by
/// (challenge index, position): slot = challenge_index * N + position.
/// `values` holds the expected discounted reward per state for the Bellman
/// solution and is empty for the enumerated heuristics. `sweep_deltas` logs
/// the max-norm value change per solver sweep.
struct PolicyTable {
    PolicyKind kind = PolicyKind::greedy;
    double gamma = 0.0;
    int iterations_used = 0;
    int num_positions = 0;
    int num_challenges = 0;
    std::vector<int> next_position;
    std::vector<double> values;
    std::vector<double> sweep_deltas;

    int next(int position, int challenge_index) const {
        return next_position[static_cast<std::size_t>(challenge_index) * num_positions + position];
    }
    double value(int position, int challenge_index) const {
        return values[static_cast<std::size_t>(challenge_index) * num_positions + position];
    }
    bool matches(const ChannelMap& map) const {
        return num_positions == map.size() && num_challenges == map.num_challenges();
    }
};

/// Solves the movement MDP by value iteration. The value of (position x,
/// challenge a) satisfies
///   V(x, a) = max over v in class(a) of [ -energy(x, v) + gamma * U(v) ]
/// with U(v) the mean of V(v, .) over the uniformly drawn next challenge.
/// Stops when the max-norm change drops below `tol` or after `max_iters`
/// sweeps; the returned policy is greedy in the converged values, ties going
/// to the lowest position index.
PolicyTable solve_value_iteration(const ChannelMap& map, const EnergyModel& model, double gamma,
                                  double tol = 1e-6, int max_iters = 10000);

/// Cheapest position realizing the challenge; ties to the lowest index.
int greedy_next(int current, double challenge_db, const ChannelMap& map, const EnergyModel& model);

/// Per-position strategic value: root-sum-of-squares of the quantized
/// attenuation deviations within the L x L window centered on the position
/// (truncated at the borders; the window mean keeps the nominal 1/L^2
/// weight). High where many distinct attenuations are reachable nearby.
struct StrategicField {
    std::vector<double> y;
    int window_l = 5;
    double delta = 100.0; // balance between strategic value and energy
    double beta = 20.0;   // decay time of the strategic term
    double max_y = 0.0;
};

StrategicField strategic_field(const ChannelMap& map, int window_l, double delta = 100.0,
                               double beta = 20.0);

/// Decaying-diversity heuristic: at step t, pick the class position
/// maximizing delta * exp(-t/beta) * Y(candidate) - energy(current,
/// candidate), by enumeration; ties to the lowest index. Once the decayed
/// bonus cannot exceed 1e-9 the strategic term is dropped and the query is
/// exactly greedy.
int std_next(int current, double challenge_db, int t, const StrategicField& field,
             const ChannelMap& map, const EnergyModel& model);

/// Enumerated stationary tables for the two heuristics (the decaying one
/// frozen at a given step); used for policy dumps.
PolicyTable make_greedy_table(const ChannelMap& map, const EnergyModel& model);
PolicyTable make_std_table(const ChannelMap& map, const EnergyModel& model,
                           const StrategicField& field, int t = 0);

} // namespace crpla

#endif // CRPLA_POLICY_HPP
