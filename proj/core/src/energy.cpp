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

#include "crpla/energy.hpp"

#include <stdexcept>

namespace crpla {

void EnergyModel::validate() const {
    if (!(alpha1_j_per_s > 0.0))
        throw std::invalid_argument("EnergyModel: alpha1_j_per_s must be positive");
    if (!(alpha0_j >= 0.0))
        throw std::invalid_argument("EnergyModel: alpha0_j must be non-negative");
    if (!(velocity_m_per_s > 0.0))
        throw std::invalid_argument("EnergyModel: velocity_m_per_s must be positive");
}

double energy(int from, int to, const EnergyModel& model, const GridSpec& grid) {
    if (from < 0 || from >= grid.size() || to < 0 || to >= grid.size())
        throw std::out_of_range("energy: position index outside the grid");
    return model.of_distance(grid.planar_distance_m(from, to));
}

} // namespace crpla
