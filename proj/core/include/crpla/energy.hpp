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

#ifndef CRPLA_ENERGY_HPP
#define CRPLA_ENERGY_HPP

#include <algorithm>

#include "crpla/grid.hpp"

namespace crpla {

/// Movement energy model: alpha1 * distance / velocity - alpha0, clamped at
/// zero (the affine fit goes negative on vanishing moves, but physical
/// energy cannot). Defaults fit a multirotor's horizontal flight.
struct EnergyModel {
    double alpha1_j_per_s = 308.71;
    double alpha0_j = 0.85;
    double velocity_m_per_s = 5.0;

    void validate() const; // throws std::invalid_argument

    double of_distance(double distance_m) const noexcept {
        return std::max(0.0, alpha1_j_per_s * distance_m / velocity_m_per_s - alpha0_j);
    }
};

/// Energy to move between two grid positions; symmetric in its arguments.
/// Throws std::out_of_range on a bad index.
double energy(int from, int to, const EnergyModel& model, const GridSpec& grid);

} // namespace crpla

#endif // CRPLA_ENERGY_HPP
