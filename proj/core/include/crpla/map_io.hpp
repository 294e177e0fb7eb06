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

#ifndef CRPLA_MAP_IO_HPP
#define CRPLA_MAP_IO_HPP

#include <string>

#include "crpla/channel_map.hpp"

namespace crpla {

/// Binary map file, little-endian, magic "CRPLAMAP" + version 1. Stores the
/// grid spec, shadowing params (with seed), requested level count, the
/// quantizer codebook and the raw eta field as float64; quantization and
/// classes are re-derived on load from the identical bits, so a save/load
/// round trip reproduces the map exactly.
void save_channel_map(const ChannelMap& map, const std::string& path);
ChannelMap load_channel_map(const std::string& path);

} // namespace crpla

#endif // CRPLA_MAP_IO_HPP
