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

#ifndef CRPLA_CHANNEL_MAP_HPP
#define CRPLA_CHANNEL_MAP_HPP

#include <vector>

#include "crpla/grid.hpp"
#include "crpla/shadowing.hpp"

namespace crpla {

/// Gridded attenuation map: continuous path loss + shadowing per position,
/// its uniform quantization, and the challenge classes (the position sets
/// sharing one quantized value). Immutable once built; share freely.
struct ChannelMap {
    GridSpec grid;
    ShadowingParams shadowing;
    int num_levels = 0;

    std::vector<double> eta_db;        // path loss + shadowing, row-major
    std::vector<double> quantized_db;  // nearest quantizer level per position
    std::vector<double> levels_db;     // quantizer codebook (cell midpoints)

    // Challenge set and classes. challenges_db is sorted ascending and holds
    // only levels hit by at least one position; classes[i] lists the position
    // indices quantizing to challenges_db[i], ascending.
    std::vector<double> challenges_db;
    std::vector<std::vector<int>> classes;

    int size() const noexcept { return grid.size(); }
    int num_challenges() const noexcept { return static_cast<int>(challenges_db.size()); }

    /// Index into challenges_db/classes; throws std::invalid_argument when
    /// the value is not a member of the challenge set (exact match).
    int class_index_of(double challenge_db) const;

    double min_quantized_db() const { return challenges_db.front(); }
    double max_quantized_db() const { return challenges_db.back(); }
};

/// Builds the full map: Friis path loss plus one synthesized shadowing
/// realization, quantized uniformly over the observed [min eta, max eta]
/// with num_levels cells (num_levels >= 2).
ChannelMap build_channel_map(const GridSpec& grid, const ShadowingParams& params, int num_levels);

/// Quantizes a caller-supplied attenuation field; used for synthetic maps.
/// `params` is kept only as metadata and is not validated here.
ChannelMap quantize_channel_map(const GridSpec& grid, std::vector<double> eta_db, int num_levels,
                                const ShadowingParams& params = {});

/// Spread of the quantized map: max - min over the challenge set, in dB.
double attenuation_range(const ChannelMap& map);

} // namespace crpla

#endif // CRPLA_CHANNEL_MAP_HPP
