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

#include "crpla/map_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace crpla {

namespace {

constexpr char kMagic[8] = {'C', 'R', 'P', 'L', 'A', 'M', 'A', 'P'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, const T& value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T value{};
    is.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!is) throw std::runtime_error("map file: truncated read");
    return value;
}

} // namespace

void save_channel_map(const ChannelMap& map, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("map file: cannot open for writing: " + path);

    os.write(kMagic, sizeof(kMagic));
    put(os, kVersion);
    put(os, static_cast<std::int32_t>(map.grid.n1));
    put(os, static_cast<std::int32_t>(map.grid.n2));
    put(os, map.grid.step_m);
    put(os, map.grid.height_m);
    put(os, map.grid.carrier_freq_hz);
    put(os, map.shadowing.sigma_sh_db);
    put(os, map.shadowing.d_coh_m);
    put(os, static_cast<std::uint64_t>(map.shadowing.seed));
    put(os, static_cast<std::int32_t>(map.num_levels));
    put(os, static_cast<std::uint64_t>(map.levels_db.size()));
    os.write(reinterpret_cast<const char*>(map.levels_db.data()),
             static_cast<std::streamsize>(map.levels_db.size() * sizeof(double)));
    put(os, static_cast<std::uint64_t>(map.eta_db.size()));
    os.write(reinterpret_cast<const char*>(map.eta_db.data()),
             static_cast<std::streamsize>(map.eta_db.size() * sizeof(double)));
    if (!os) throw std::runtime_error("map file: write failed: " + path);
}

ChannelMap load_channel_map(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("map file: cannot open for reading: " + path);

    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("map file: bad magic: " + path);
    if (get<std::uint32_t>(is) != kVersion)
        throw std::runtime_error("map file: unsupported version: " + path);

    GridSpec grid;
    grid.n1 = get<std::int32_t>(is);
    grid.n2 = get<std::int32_t>(is);
    grid.step_m = get<double>(is);
    grid.height_m = get<double>(is);
    grid.carrier_freq_hz = get<double>(is);

    ShadowingParams params;
    params.sigma_sh_db = get<double>(is);
    params.d_coh_m = get<double>(is);
    params.seed = get<std::uint64_t>(is);

    const int num_levels = get<std::int32_t>(is);

    const auto n_levels = get<std::uint64_t>(is);
    std::vector<double> levels(n_levels);
    is.read(reinterpret_cast<char*>(levels.data()),
            static_cast<std::streamsize>(n_levels * sizeof(double)));

    const auto n_eta = get<std::uint64_t>(is);
    if (n_eta != static_cast<std::uint64_t>(grid.n1) * grid.n2)
        throw std::runtime_error("map file: field size inconsistent with grid: " + path);
    std::vector<double> eta(n_eta);
    is.read(reinterpret_cast<char*>(eta.data()),
            static_cast<std::streamsize>(n_eta * sizeof(double)));
    if (!is) throw std::runtime_error("map file: truncated read: " + path);

    ChannelMap map = quantize_channel_map(grid, std::move(eta), num_levels, params);
    if (map.levels_db != levels)
        throw std::runtime_error("map file: stored codebook does not match the field: " + path);
    return map;
}

} // namespace crpla
