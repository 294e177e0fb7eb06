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

#ifndef CRPLA_GRID_HPP
#define CRPLA_GRID_HPP

#include <cmath>

namespace crpla {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Regular planar grid of receiver positions. The transmitter sits at the
/// ground projection of the grid centroid; the flight plane is `height_m`
/// above it. Positions are indexed row-major: index = row * n1 + col.
struct GridSpec {
    int n1 = 50;                    // columns
    int n2 = 50;                    // rows
    double step_m = 1.0;            // grid step along both axes
    double height_m = 20.0;         // flight plane above the transmitter
    double carrier_freq_hz = 1.8e9;

    int size() const noexcept { return n1 * n2; }

    int col_of(int index) const noexcept { return index % n1; }
    int row_of(int index) const noexcept { return index / n1; }
    int index_of(int col, int row) const noexcept { return row * n1 + col; }

    // Planar coordinates with the grid centroid at (0, 0).
    double x_of(int index) const noexcept {
        return (col_of(index) - 0.5 * (n1 - 1)) * step_m;
    }
    double y_of(int index) const noexcept {
        return (row_of(index) - 0.5 * (n2 - 1)) * step_m;
    }

    double planar_distance_m(int a, int b) const noexcept {
        const double dx = x_of(a) - x_of(b);
        const double dy = y_of(a) - y_of(b);
        return std::sqrt(dx * dx + dy * dy);
    }

    /// 3D distance from the transmitter to a grid position.
    double transmitter_distance_m(int index) const noexcept {
        const double x = x_of(index);
        const double y = y_of(index);
        return std::sqrt(x * x + y * y + height_m * height_m);
    }

    double wavelength_m() const noexcept { return kSpeedOfLight / carrier_freq_hz; }

    /// Throws std::invalid_argument when any field is out of range
    /// (n1, n2 >= 2; step_m > 0; height_m >= 0; carrier_freq_hz > 0).
    void validate() const;
};

/// Free-space path loss in dB, 20*log10(4*pi*d*f0/c), with d the 3D
/// transmitter distance of the grid position. Throws std::out_of_range for a
/// bad index and std::domain_error when the position coincides with the
/// transmitter (d = 0).
double friis_path_loss(const GridSpec& grid, int position_index);

} // namespace crpla

#endif // CRPLA_GRID_HPP
