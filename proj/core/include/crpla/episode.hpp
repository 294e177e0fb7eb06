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

#ifndef CRPLA_EPISODE_HPP
#define CRPLA_EPISODE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "crpla/auth.hpp"
#include "crpla/channel_map.hpp"
#include "crpla/energy.hpp"
#include "crpla/policy.hpp"
#include "crpla/rng.hpp"

namespace crpla {

/// One verification round: the drawn challenge, the move made to realize it,
/// the energy charged for that move, and the authentication outcome.
struct EpisodeStep {
    int t = 0; // 1-based round counter
    double challenge_db = 0.0;
    int from = 0;
    int to = 0;
    double energy_j = 0.0;
    double observed_db = 0.0;
    Hypothesis hypothesis = Hypothesis::legitimate;
    Decision decision = Decision::reject;
};

/// A full episode from a fixed start position.
struct EpisodeTrace {
    int start = 0;
    std::vector<EpisodeStep> steps;

    double total_energy_j() const;
    long accept_count() const;
};

/// Movement rule: next position for the current position, the drawn
/// challenge, and the 1-based round counter. Must return a position whose
/// quantized attenuation equals the challenge.
using PolicyFn = std::function<int(int current, double challenge_db, int t)>;

/// Uniform draw of a start position over the whole grid.
int draw_start(const ChannelMap& map, RngEngine& rng);

/// Run `length` verification rounds from `start`. Each round draws a
/// challenge uniformly from the map's challenge set, moves per `policy`
/// (charging movement energy), synthesizes a response for the scheduled
/// hypothesis (legitimate: exponential fading above the challenge; attack:
/// uniform guess over the map's attenuation range), and verifies it.
/// An empty `schedule` means every round is legitimate; otherwise it must
/// list one hypothesis per round. Each round consumes exactly one challenge
/// draw and one response draw, so traces driven by the same engine state
/// share random streams across policies.
EpisodeTrace run_episode(const ChannelMap& map, const EnergyModel& model,
                         const VerifierConfig& verifier, const PolicyFn& policy, int length,
                         int start, RngEngine& rng,
                         const std::vector<Hypothesis>& schedule = {});

/// Same, moving per a precomputed policy table. Throws when the table's
/// dimensions do not match the map.
EpisodeTrace run_episode(const ChannelMap& map, const EnergyModel& model,
                         const VerifierConfig& verifier, const PolicyTable& table, int length,
                         int start, RngEngine& rng,
                         const std::vector<Hypothesis>& schedule = {});

/// Side-by-side energy statistics for several policies under common random
/// numbers: every policy replays the same starts and the same challenge and
/// response streams, so per-step differences reflect the policies alone.
struct PolicyComparison {
    std::vector<PolicyKind> kinds; // row order of the tensors below
    int episode_length = 0;
    int num_starts = 0;
    std::vector<int> starts; // start position of each episode index

    /// energy_j[policy][start][t-1]
    std::vector<std::vector<std::vector<double>>> energy_j;
    /// mean_energy_j[policy][t-1], aggregated over starts
    std::vector<std::vector<double>> mean_energy_j;
    /// sample standard deviation per policy and step over starts
    std::vector<std::vector<double>> std_energy_j;
};

/// Run the optimal, diversity-weighted, and greedy policies from
/// `num_starts` shared random starts for `episode_length` legitimate rounds
/// each, and aggregate per-step energy. Episode k derives its seed from
/// `master_seed`, so the comparison is reproducible and policy-aligned.
PolicyComparison compare_policies(const ChannelMap& map, const EnergyModel& model,
                                  const VerifierConfig& verifier, const PolicyTable& bellman,
                                  const StrategicField& field, int episode_length, int num_starts,
                                  std::uint64_t master_seed);

} // namespace crpla

#endif // CRPLA_EPISODE_HPP
