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

#include "crpla/episode.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace crpla {

double EpisodeTrace::total_energy_j() const {
    double sum = 0.0;
    for (const auto& step : steps) sum += step.energy_j;
    return sum;
}

long EpisodeTrace::accept_count() const {
    long count = 0;
    for (const auto& step : steps)
        if (step.decision == Decision::accept) ++count;
    return count;
}

int draw_start(const ChannelMap& map, RngEngine& rng) {
    std::uniform_int_distribution<int> dist(0, map.size() - 1);
    return dist(rng);
}

EpisodeTrace run_episode(const ChannelMap& map, const EnergyModel& model,
                         const VerifierConfig& verifier, const PolicyFn& policy, int length,
                         int start, RngEngine& rng, const std::vector<Hypothesis>& schedule) {
    if (length < 0)
        throw std::invalid_argument("run_episode: episode length must be non-negative");
    if (start < 0 || start >= map.size())
        throw std::out_of_range("run_episode: start position outside the grid");
    if (!schedule.empty() && schedule.size() != static_cast<std::size_t>(length))
        throw std::invalid_argument("run_episode: hypothesis schedule length mismatch");
    if (!policy)
        throw std::invalid_argument("run_episode: empty policy");

    const double attack_lo = map.size() > 0 ? map.min_quantized_db() : 0.0;
    const double attack_hi = map.size() > 0 ? map.max_quantized_db() : 0.0;

    EpisodeTrace trace;
    trace.start = start;
    trace.steps.reserve(static_cast<std::size_t>(length));

    int current = start;
    for (int t = 1; t <= length; ++t) {
        EpisodeStep step;
        step.t = t;
        step.challenge_db = draw_challenge(map.challenges_db, rng);
        step.from = current;
        step.to = policy(current, step.challenge_db, t);
        if (step.to < 0 || step.to >= map.size())
            throw std::runtime_error("run_episode: policy moved outside the grid");
        if (map.quantized_db[static_cast<std::size_t>(step.to)] != step.challenge_db)
            throw std::runtime_error(
                "run_episode: policy chose a position that does not realize the challenge");
        step.energy_j = energy(step.from, step.to, model, map.grid);
        step.hypothesis =
            schedule.empty() ? Hypothesis::legitimate : schedule[static_cast<std::size_t>(t - 1)];
        step.observed_db = step.hypothesis == Hypothesis::legitimate
                               ? sample_legit_response(step.challenge_db, rng)
                               : sample_attack_response(attack_lo, attack_hi, rng);
        step.decision = verify(step.observed_db, step.challenge_db, verifier);
        trace.steps.push_back(step);
        current = step.to;
    }
    return trace;
}

EpisodeTrace run_episode(const ChannelMap& map, const EnergyModel& model,
                         const VerifierConfig& verifier, const PolicyTable& table, int length,
                         int start, RngEngine& rng, const std::vector<Hypothesis>& schedule) {
    if (!table.matches(map))
        throw std::invalid_argument("run_episode: policy table does not match the map");
    PolicyFn fn = [&map, &table](int current, double challenge_db, int) {
        return table.next(current, map.class_index_of(challenge_db));
    };
    return run_episode(map, model, verifier, fn, length, start, rng, schedule);
}

PolicyComparison compare_policies(const ChannelMap& map, const EnergyModel& model,
                                  const VerifierConfig& verifier, const PolicyTable& bellman,
                                  const StrategicField& field, int episode_length, int num_starts,
                                  std::uint64_t master_seed) {
    if (episode_length < 1)
        throw std::invalid_argument("compare_policies: episode length must be >= 1");
    if (num_starts < 1)
        throw std::invalid_argument("compare_policies: need at least one start");
    if (!bellman.matches(map))
        throw std::invalid_argument("compare_policies: policy table does not match the map");
    if (field.y.size() != static_cast<std::size_t>(map.size()))
        throw std::invalid_argument("compare_policies: strategic field does not match the map");

    PolicyComparison cmp;
    cmp.kinds = {PolicyKind::bellman, PolicyKind::decaying_std, PolicyKind::greedy};
    cmp.episode_length = episode_length;
    cmp.num_starts = num_starts;
    cmp.starts.resize(static_cast<std::size_t>(num_starts));

    std::vector<PolicyFn> fns;
    fns.push_back([&map, &bellman](int current, double challenge_db, int) {
        return bellman.next(current, map.class_index_of(challenge_db));
    });
    fns.push_back([&map, &model, &field](int current, double challenge_db, int t) {
        return std_next(current, challenge_db, t, field, map, model);
    });
    fns.push_back([&map, &model](int current, double challenge_db, int) {
        return greedy_next(current, challenge_db, map, model);
    });

    const std::size_t p_count = fns.size();
    cmp.energy_j.assign(p_count,
                        std::vector<std::vector<double>>(
                            static_cast<std::size_t>(num_starts),
                            std::vector<double>(static_cast<std::size_t>(episode_length), 0.0)));

    for (int k = 0; k < num_starts; ++k) {
        const std::uint64_t seed_k =
            derive_seed(master_seed, "episode", static_cast<std::uint64_t>(k));
        for (std::size_t p = 0; p < p_count; ++p) {
            auto rng = make_engine(seed_k);
            const int start = draw_start(map, rng);
            if (p == 0) cmp.starts[static_cast<std::size_t>(k)] = start;
            const auto trace =
                run_episode(map, model, verifier, fns[p], episode_length, start, rng);
            for (int t = 0; t < episode_length; ++t)
                cmp.energy_j[p][static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] =
                    trace.steps[static_cast<std::size_t>(t)].energy_j;
        }
    }

    cmp.mean_energy_j.assign(p_count,
                             std::vector<double>(static_cast<std::size_t>(episode_length), 0.0));
    cmp.std_energy_j.assign(p_count,
                            std::vector<double>(static_cast<std::size_t>(episode_length), 0.0));
    for (std::size_t p = 0; p < p_count; ++p) {
        for (int t = 0; t < episode_length; ++t) {
            double sum = 0.0;
            for (int k = 0; k < num_starts; ++k)
                sum += cmp.energy_j[p][static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
            const double mean = sum / num_starts;
            cmp.mean_energy_j[p][static_cast<std::size_t>(t)] = mean;
            if (num_starts > 1) {
                double dev_sq = 0.0;
                for (int k = 0; k < num_starts; ++k) {
                    const double d =
                        cmp.energy_j[p][static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] -
                        mean;
                    dev_sq += d * d;
                }
                cmp.std_energy_j[p][static_cast<std::size_t>(t)] =
                    std::sqrt(dev_sq / (num_starts - 1));
            }
        }
    }
    return cmp;
}

} // namespace crpla
