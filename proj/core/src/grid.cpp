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

#include "crpla/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace crpla {

void GridSpec::validate() const {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("GridSpec: n1 and n2 must both be >= 2");
    if (!(step_m > 0.0))
        throw std::invalid_argument("GridSpec: step_m must be positive");
    if (!(height_m >= 0.0))
        throw std::invalid_argument("GridSpec: height_m must be non-negative");
    if (!(carrier_freq_hz > 0.0))
        throw std::invalid_argument("GridSpec: carrier_freq_hz must be positive");
}

double friis_path_loss(const GridSpec& grid, int position_index) {
    if (position_index < 0 || position_index >= grid.size())
        throw std::out_of_range("friis_path_loss: position index " +
                                std::to_string(position_index) + " outside grid of " +
                                std::to_string(grid.size()) + " positions");
    const double d = grid.transmitter_distance_m(position_index);
    if (d <= 0.0)
        throw std::domain_error("friis_path_loss: position coincides with the transmitter");
    return 20.0 * std::log10(4.0 * std::numbers::pi * d * grid.carrier_freq_hz / kSpeedOfLight);
}

} // namespace crpla
