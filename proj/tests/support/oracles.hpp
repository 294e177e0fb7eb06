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
// Independent reference implementations the tests check the library
// against. Everything here is written for clarity, not speed, and avoids
// the production code paths it verifies.

#ifndef CRPLA_TESTS_SUPPORT_ORACLES_HPP
#define CRPLA_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "crpla/channel_map.hpp"
#include "crpla/energy.hpp"
#include "crpla/grid.hpp"

namespace crpla::test {

inline double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

inline double sample_std_of(std::span<const double> values) {
    const double m = mean_of(values);
    double sq = 0.0;
    for (double v : values) sq += (v - m) * (v - m);
    return std::sqrt(sq / static_cast<double>(values.size() - 1));
}

/// Normalized empirical autocorrelation of a gridded field at an integer
/// lag, averaged over both axes: pair-mean of centered products divided by
/// the field variance.
inline double grid_autocorr(const std::vector<double>& field, int n1, int n2, int lag) {
    const double m = mean_of(field);
    double var = 0.0;
    for (double v : field) var += (v - m) * (v - m);
    var /= static_cast<double>(field.size());

    double prod = 0.0;
    std::size_t pairs = 0;
    for (int r = 0; r < n2; ++r)
        for (int c = 0; c + lag < n1; ++c) {
            const std::size_t k = static_cast<std::size_t>(r) * n1 + c;
            prod += (field[k] - m) * (field[k + lag] - m);
            ++pairs;
        }
    for (int r = 0; r + lag < n2; ++r)
        for (int c = 0; c < n1; ++c) {
            const std::size_t k = static_cast<std::size_t>(r) * n1 + c;
            prod += (field[k] - m) * (field[k + static_cast<std::size_t>(lag) * n1] - m);
            ++pairs;
        }
    return prod / static_cast<double>(pairs) / var;
}

/// Autocorrelation at a fractional lag (in grid steps) by linear
/// interpolation between the neighbouring integer lags.
inline double grid_autocorr_at(const std::vector<double>& field, int n1, int n2,
                               double lag_steps) {
    const int k0 = static_cast<int>(std::floor(lag_steps));
    const double frac = lag_steps - k0;
    const double lo = k0 == 0 ? 1.0 : grid_autocorr(field, n1, n2, k0);
    const double hi = grid_autocorr(field, n1, n2, k0 + 1);
    return lo + frac * (hi - lo);
}

/// Finite-horizon expectimax values computed by brute force: from every
/// (position, challenge) state, the drone picks the move maximizing
/// -cost + gamma * (average over the next uniform challenge of the value
/// one step later), bottoming out at zero. Returned layout:
/// value[challenge * N + position] at the requested horizon.
inline std::vector<double> expectimax_values(const ChannelMap& map, const EnergyModel& model,
                                             double gamma, int horizon) {
    const int n = map.size();
    const int a_count = map.num_challenges();
    std::vector<double> older(static_cast<std::size_t>(a_count) * n, 0.0);
    std::vector<double> newer(older.size(), 0.0);
    for (int h = 1; h <= horizon; ++h) {
        for (int a = 0; a < a_count; ++a) {
            for (int x = 0; x < n; ++x) {
                double best = -1e300;
                for (int v : map.classes[static_cast<std::size_t>(a)]) {
                    double future = 0.0;
                    for (int a2 = 0; a2 < a_count; ++a2)
                        future += older[static_cast<std::size_t>(a2) * n + v];
                    future /= a_count;
                    const double score =
                        -energy(x, v, model, map.grid) + gamma * future;
                    best = std::max(best, score);
                }
                newer[static_cast<std::size_t>(a) * n + x] = best;
            }
        }
        older.swap(newer);
    }
    return older;
}

/// Horizon needed so the truncated discounted tail is below `tail_bound`:
/// the per-step cost never exceeds the most expensive move on the map.
inline int expectimax_horizon(const ChannelMap& map, const EnergyModel& model, double gamma,
                              double tail_bound) {
    double max_cost = 0.0;
    for (int x = 0; x < map.size(); ++x)
        for (int v = 0; v < map.size(); ++v)
            max_cost = std::max(max_cost, energy(x, v, model, map.grid));
    if (max_cost == 0.0) return 1;
    const double tail0 = max_cost / (1.0 - gamma);
    int h = 1;
    double tail = tail0 * gamma;
    while (tail >= tail_bound) {
        tail *= gamma;
        ++h;
    }
    return h;
}

/// Exact acceptance probability of the uniform-guess attack on a quantized
/// map: the challenge is uniform over the discrete challenge set, the guess
/// uniform over the continuous attenuation span, and a guess is accepted
/// when it lands within `interval_db` above the challenge.
inline double discrete_attack_accept_probability(const ChannelMap& map, double interval_db) {
    const double lo = map.min_quantized_db();
    const double hi = map.max_quantized_db();
    const double span = hi - lo;
    if (span <= 0.0) return 1.0; // a single level: the guess always hits it
    double total = 0.0;
    for (double a : map.challenges_db) {
        const double upper = std::min(a + interval_db, hi);
        total += std::max(0.0, upper - a) / span;
    }
    return total / static_cast<double>(map.challenges_db.size());
}

/// Exhaustive lowest-cost member of a challenge class (ties to the lowest
/// index, which is the first member scanned).
inline int scan_greedy(int current, const std::vector<int>& members, const ChannelMap& map,
                       const EnergyModel& model) {
    int best_pos = members.front();
    double best = energy(current, best_pos, model, map.grid);
    for (int v : members) {
        const double cost = energy(current, v, model, map.grid);
        if (cost < best) {
            best = cost;
            best_pos = v;
        }
    }
    return best_pos;
}

/// Exhaustive argmax of the decaying diversity score over a challenge
/// class.
inline int scan_std(int current, const std::vector<int>& members, const ChannelMap& map,
                    const EnergyModel& model, const std::vector<double>& y, double delta,
                    double beta, int t) {
    const double decay = delta * std::exp(-static_cast<double>(t) / beta);
    int best_pos = members.front();
    double best = -1e300;
    for (int v : members) {
        const double score =
            decay * y[static_cast<std::size_t>(v)] - energy(current, v, model, map.grid);
        if (score > best) {
            best = score;
            best_pos = v;
        }
    }
    return best_pos;
}

} // namespace crpla::test

#endif // CRPLA_TESTS_SUPPORT_ORACLES_HPP
