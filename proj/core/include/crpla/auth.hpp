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

#ifndef CRPLA_AUTH_HPP
#define CRPLA_AUTH_HPP

#include <span>
#include <vector>

#include "crpla/rng.hpp"

namespace crpla {

/// Verifier setup: target false-alarm probability and the acceptance
/// interval it induces. A legitimate response carries a non-negative
/// exponential fading offset, so the interval [0, -ln(p_fa)] above the
/// challenge accepts legitimate traffic with probability 1 - p_fa exactly.
struct VerifierConfig {
    double p_fa = 0.05;
    double interval_db = 0.0; // -ln(p_fa)

    static VerifierConfig from_p_fa(double p_fa); // throws on p_fa outside (0,1)
};

enum class Hypothesis { legitimate, attack };
enum class Decision { accept, reject };

/// One challenge/response round with its ground truth and verdict.
struct AuthTrial {
    double challenge_db = 0.0;
    double observed_db = 0.0;
    Hypothesis hypothesis = Hypothesis::legitimate;
    Decision decision = Decision::reject;
};

/// Uniform draw from the challenge set; throws on an empty set.
double draw_challenge(std::span<const double> challenges_db, RngEngine& rng);

/// Legitimate response: challenge plus unit-rate exponential fading (dB).
double sample_legit_response(double challenge_db, RngEngine& rng);

/// Guessing attack: uniform over the attenuation domain. Throws when the
/// range is inverted.
double sample_attack_response(double range_min_db, double range_max_db, RngEngine& rng);

/// Threshold test: accept iff the observed attenuation exceeds the challenge
/// by at most the acceptance interval (and never falls below it). Both
/// boundaries accept. Pure function.
Decision verify(double observed_db, double challenge_db, const VerifierConfig& config);

/// Missed-detection probability of the uniform guessing attack under the
/// continuous model: both challenge and guess uniform over a width-r domain,
/// their difference triangular. Clamped to 1/2 once the acceptance interval
/// covers the whole range. Throws on r <= 0 or p_fa outside (0,1).
double analytic_pmd(double range_r_db, double p_fa);

/// One operating point of a simulated detection-tradeoff curve.
struct DetPoint {
    double p_fa_target = 0.0;
    double p_fa_empirical = 0.0;
    double p_md_empirical = 0.0;
};

/// Monte Carlo detection-tradeoff sweep at a given attenuation range:
/// `trials` legitimate rounds and `trials` attack rounds per target
/// false-alarm value, challenges uniform over the continuous range.
std::vector<DetPoint> simulate_det(double range_r_db, std::span<const double> p_fa_grid,
                                   long trials, RngEngine& rng);

} // namespace crpla

#endif // CRPLA_AUTH_HPP
