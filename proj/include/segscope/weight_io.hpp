// Copyright 2026 The segscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "segscope/core.hpp"

namespace segscope {

/// WGT1 layout, all little-endian:
///   0..3   magic "WGT1"
///   4..7   width  (u32)
///   8..11  height (u32)
///   12..   width*height IEEE-754 binary32, row-major, top-left origin
std::vector<std::uint8_t> encode_weight_field(const WeightField& field);
WeightField decode_weight_field(std::span<const std::uint8_t> bytes);

WeightField load_weight_field(const std::filesystem::path& path);
void write_weight_field(const WeightField& field, const std::filesystem::path& path);

}  // namespace segscope
