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

#include "crpla/auth.hpp"

#include <cmath>
#include <stdexcept>

namespace crpla {

VerifierConfig VerifierConfig::from_p_fa(double p_fa) {
    if (!(p_fa > 0.0 && p_fa < 1.0))
        throw std::invalid_argument("VerifierConfig: p_fa must lie in (0, 1)");
    return VerifierConfig{p_fa, -std::log(p_fa)};
}

double draw_challenge(std::span<const double> challenges_db, RngEngine& rng) {
    if (challenges_db.empty())
        throw std::invalid_argument("draw_challenge: empty challenge set");
    std::uniform_int_distribution<std::size_t> pick(0, challenges_db.size() - 1);
    return challenges_db[pick(rng)];
}

double sample_legit_response(double challenge_db, RngEngine& rng) {
    std::exponential_distribution<double> fading(1.0);
    return challenge_db + fading(rng);
}

double sample_attack_response(double range_min_db, double range_max_db, RngEngine& rng) {
    if (range_max_db < range_min_db)
        throw std::invalid_argument("sample_attack_response: inverted range");
    if (range_max_db == range_min_db) return range_min_db;
    std::uniform_real_distribution<double> guess(range_min_db, range_max_db);
    return guess(rng);
}

Decision verify(double observed_db, double challenge_db, const VerifierConfig& config) {
    const double deviation = observed_db - challenge_db;
    return (deviation >= 0.0 && deviation <= config.interval_db) ? Decision::accept
                                                                 : Decision::reject;
}

double analytic_pmd(double range_r_db, double p_fa) {
    if (!(range_r_db > 0.0))
        throw std::invalid_argument("analytic_pmd: range must be positive");
    if (!(p_fa > 0.0 && p_fa < 1.0))
        throw std::invalid_argument("analytic_pmd: p_fa must lie in (0, 1)");
    const double interval = -std::log(p_fa);
    if (interval >= range_r_db) return 0.5;
    const double u = (range_r_db + std::log(p_fa)) / range_r_db;
    return 0.5 - 0.5 * u * u;
}

std::vector<DetPoint> simulate_det(double range_r_db, std::span<const double> p_fa_grid,
                                   long trials, RngEngine& rng) {
    if (!(range_r_db > 0.0))
        throw std::invalid_argument("simulate_det: range must be positive");
    if (trials < 1)
        throw std::invalid_argument("simulate_det: trials must be >= 1");
    for (double p : p_fa_grid)
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("simulate_det: every p_fa must lie in (0, 1)");

    std::uniform_real_distribution<double> domain(0.0, range_r_db);
    std::vector<DetPoint> points;
    points.reserve(p_fa_grid.size());
    for (double p_fa : p_fa_grid) {
        const VerifierConfig config = VerifierConfig::from_p_fa(p_fa);
        long false_alarms = 0;
        for (long i = 0; i < trials; ++i) {
            const double challenge = domain(rng);
            const double observed = sample_legit_response(challenge, rng);
            if (verify(observed, challenge, config) == Decision::reject) ++false_alarms;
        }
        long missed = 0;
        for (long i = 0; i < trials; ++i) {
            const double challenge = domain(rng);
            const double guess = domain(rng);
            if (verify(guess, challenge, config) == Decision::accept) ++missed;
        }
        points.push_back({p_fa, double(false_alarms) / double(trials),
                          double(missed) / double(trials)});
    }
    return points;
}

} // namespace crpla
