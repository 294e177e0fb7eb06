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

#ifndef CRPLA_SHADOWING_HPP
#define CRPLA_SHADOWING_HPP

#include <cstdint>
#include <vector>

#include "crpla/grid.hpp"

namespace crpla {

/// Parameters of the spatially correlated log-normal shadowing process.
struct ShadowingParams {
    double sigma_sh_db = 6.0; // field standard deviation; typical range 4..12 dB
    double d_coh_m = 0.0;     // coherence distance of the exponential correlation
    std::uint64_t seed = 0;

    void validate() const; // throws std::invalid_argument
};

/// Coherence distance of ten wavelengths, the simulator default.
inline double default_d_coh_m(const GridSpec& grid) { return 10.0 * grid.wavelength_m(); }

/// Exponential (Gudmundson) correlation of the shadowing at separation
/// `delta_m`: sigma_sh^2 * exp(-delta/D_coh), in dB^2. Negative separations
/// throw std::invalid_argument.
double gudmundson_corr(double delta_m, const ShadowingParams& params);

/// Synthesizes one realization of the correlated shadowing field over the
/// grid (row-major, dB). The field is produced by spectral filtering: the
/// correlation is sampled on the torus distance grid, its 2D DFT (clamped at
/// zero from below) gives the filter power response, the unit-energy filter
/// is applied to i.i.d. complex Gaussian noise by circular convolution, and
/// the real part is rescaled so the sample standard deviation equals
/// sigma_sh_db exactly. Same (grid, params) give a bit-identical field.
std::vector<double> synthesize_shadowing(const GridSpec& grid, const ShadowingParams& params);

} // namespace crpla

#endif // CRPLA_SHADOWING_HPP
