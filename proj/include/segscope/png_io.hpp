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

struct PngHeader {
    int width = 0;
    int height = 0;
    int bit_depth = 0;
    int channels = 0;
    bool palette = false;
};

/// Reads only the IHDR chunk.
PngHeader read_png_header(const std::filesystem::path& path);

/// Label maps are 8-bit single-channel grayscale PNGs whose sample values are
/// trainIds. Palette, 16-bit and multi-channel files are rejected as decode
/// errors; any sample outside {0..18, 255} is an invalid-label error naming
/// the first offending pixel in row-major order.
LabelMap load_label_map(const std::filesystem::path& path);
LabelMap decode_label_map_png(std::span<const std::uint8_t> bytes);

/// 8-bit RGB PNG; gray and alpha variants are expanded/stripped.
RgbImage load_rgb_image(const std::filesystem::path& path);
RgbImage decode_rgb_png(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_png(const LabelMap& map);
std::vector<std::uint8_t> encode_png(const RgbImage& image);

void write_label_map(const LabelMap& map, const std::filesystem::path& path);
void write_rgb_image(const RgbImage& image, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace segscope
