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

#include "crpla/channel_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace crpla {

int ChannelMap::class_index_of(double challenge_db) const {
    const auto it = std::lower_bound(challenges_db.begin(), challenges_db.end(), challenge_db);
    if (it == challenges_db.end() || *it != challenge_db)
        throw std::invalid_argument("ChannelMap: value is not in the challenge set");
    return static_cast<int>(it - challenges_db.begin());
}

ChannelMap quantize_channel_map(const GridSpec& grid, std::vector<double> eta_db, int num_levels,
                                const ShadowingParams& params) {
    grid.validate();
    if (num_levels < 2)
        throw std::invalid_argument("quantize_channel_map: num_levels must be >= 2");
    if (eta_db.size() != static_cast<std::size_t>(grid.size()))
        throw std::invalid_argument("quantize_channel_map: field size does not match the grid");

    ChannelMap map;
    map.grid = grid;
    map.shadowing = params;
    map.num_levels = num_levels;
    map.eta_db = std::move(eta_db);

    const auto [lo_it, hi_it] = std::minmax_element(map.eta_db.begin(), map.eta_db.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double width = (hi - lo) / num_levels;

    if (width > 0.0) {
        map.levels_db.resize(num_levels);
        for (int k = 0; k < num_levels; ++k)
            map.levels_db[k] = lo + (k + 0.5) * width;
    } else {
        map.levels_db.assign(1, lo); // constant field, one reconstruction value
    }

    // Cell assignment; a value exactly on a boundary joins the upper cell.
    map.quantized_db.resize(map.eta_db.size());
    std::map<double, std::vector<int>> by_level;
    for (int n = 0; n < map.size(); ++n) {
        int cell = 0;
        if (width > 0.0) {
            cell = static_cast<int>(std::floor((map.eta_db[n] - lo) / width));
            cell = std::clamp(cell, 0, num_levels - 1);
        }
        const double level = map.levels_db[static_cast<std::size_t>(cell)];
        map.quantized_db[n] = level;
        by_level[level].push_back(n);
    }

    map.challenges_db.reserve(by_level.size());
    map.classes.reserve(by_level.size());
    for (auto& [level, members] : by_level) {
        map.challenges_db.push_back(level);
        map.classes.push_back(std::move(members));
    }
    return map;
}

ChannelMap build_channel_map(const GridSpec& grid, const ShadowingParams& params, int num_levels) {
    grid.validate();
    params.validate();

    std::vector<double> eta = synthesize_shadowing(grid, params);
    for (int n = 0; n < grid.size(); ++n)
        eta[n] += friis_path_loss(grid, n);
    return quantize_channel_map(grid, std::move(eta), num_levels, params);
}

double attenuation_range(const ChannelMap& map) {
    if (map.challenges_db.empty())
        throw std::invalid_argument("attenuation_range: map has no challenge set");
    return map.challenges_db.back() - map.challenges_db.front();
}

} // namespace crpla
