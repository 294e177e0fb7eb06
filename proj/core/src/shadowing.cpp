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

#include "crpla/shadowing.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "crpla/rng.hpp"

namespace crpla {

namespace {

struct FftwArray {
    fftw_complex* data = nullptr;
    explicit FftwArray(std::size_t n) : data(fftw_alloc_complex(n)) {
        if (!data) throw std::bad_alloc();
    }
    ~FftwArray() { fftw_free(data); }
    FftwArray(const FftwArray&) = delete;
    FftwArray& operator=(const FftwArray&) = delete;
};

struct FftwPlan {
    fftw_plan plan = nullptr;
    FftwPlan(int rows, int cols, fftw_complex* in, fftw_complex* out, int sign)
        : plan(fftw_plan_dft_2d(rows, cols, in, out, sign, FFTW_ESTIMATE)) {
        if (!plan) throw std::runtime_error("synthesize_shadowing: FFTW plan creation failed");
    }
    ~FftwPlan() { fftw_destroy_plan(plan); }
    FftwPlan(const FftwPlan&) = delete;
    FftwPlan& operator=(const FftwPlan&) = delete;
    void execute() const { fftw_execute(plan); }
};

} // namespace

void ShadowingParams::validate() const {
    if (!(sigma_sh_db > 0.0))
        throw std::invalid_argument("ShadowingParams: sigma_sh_db must be positive");
    if (!(d_coh_m > 0.0))
        throw std::invalid_argument("ShadowingParams: d_coh_m must be positive");
}

double gudmundson_corr(double delta_m, const ShadowingParams& params) {
    params.validate();
    if (delta_m < 0.0)
        throw std::invalid_argument("gudmundson_corr: separation must be non-negative");
    return params.sigma_sh_db * params.sigma_sh_db * std::exp(-delta_m / params.d_coh_m);
}

std::vector<double> synthesize_shadowing(const GridSpec& grid, const ShadowingParams& params) {
    grid.validate();
    params.validate();

    const int cols = grid.n1;
    const int rows = grid.n2;
    const std::size_t total = static_cast<std::size_t>(cols) * rows;

    FftwArray buf(total);
    FftwPlan forward(rows, cols, buf.data, buf.data, FFTW_FORWARD);
    FftwPlan backward(rows, cols, buf.data, buf.data, FFTW_BACKWARD);

    // Correlation sampled on torus distances, so its DFT is real.
    for (int r = 0; r < rows; ++r) {
        const int wr = std::min(r, rows - r);
        for (int c = 0; c < cols; ++c) {
            const int wc = std::min(c, cols - c);
            const double delta = grid.step_m * std::sqrt(double(wc) * wc + double(wr) * wr);
            const std::size_t k = static_cast<std::size_t>(r) * cols + c;
            buf.data[k][0] = gudmundson_corr(delta, params);
            buf.data[k][1] = 0.0;
        }
    }
    forward.execute();

    // Power response: clamp the small negative values the finite sampling
    // can produce, then normalize the filter to unit spatial energy.
    std::vector<double> response(total);
    double power_sum = 0.0;
    for (std::size_t k = 0; k < total; ++k) {
        const double p = std::max(buf.data[k][0], 0.0);
        response[k] = p;
        power_sum += p;
    }
    if (!(power_sum > 0.0))
        throw std::runtime_error("synthesize_shadowing: degenerate power response");
    const double filter_gain = 1.0 / std::sqrt(power_sum / double(total)); // Parseval
    for (std::size_t k = 0; k < total; ++k)
        response[k] = filter_gain * std::sqrt(response[k]);

    // i.i.d. complex Gaussian noise, circularly convolved with the filter.
    RngEngine rng = make_engine(params.seed);
    std::normal_distribution<double> gauss(0.0, params.sigma_sh_db / std::sqrt(2.0));
    for (std::size_t k = 0; k < total; ++k) {
        buf.data[k][0] = gauss(rng);
        buf.data[k][1] = gauss(rng);
    }
    forward.execute();
    for (std::size_t k = 0; k < total; ++k) {
        buf.data[k][0] *= response[k];
        buf.data[k][1] *= response[k];
    }
    backward.execute();

    const double inv_total = 1.0 / double(total);
    std::vector<double> field(total);
    double mean = 0.0;
    for (std::size_t k = 0; k < total; ++k) {
        field[k] = buf.data[k][0] * inv_total;
        mean += field[k];
    }
    mean *= inv_total;

    double sq = 0.0;
    for (double v : field) sq += (v - mean) * (v - mean);
    const double sample_std = std::sqrt(sq / double(total - 1));
    if (!(sample_std > 0.0))
        throw std::runtime_error("synthesize_shadowing: zero-variance realization");

    const double scale = params.sigma_sh_db / sample_std;
    for (double& v : field) v *= scale;
    return field;
}

} // namespace crpla
