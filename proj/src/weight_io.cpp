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

#include "segscope/weight_io.hpp"

#include <bit>
#include <cstring>

#include <fmt/format.h>

#include "segscope/png_io.hpp"

namespace segscope {

namespace {

constexpr std::uint8_t kMagic[4] = {'W', 'G', 'T', '1'};
constexpr std::size_t kHeaderSize = 12;

std::uint32_t read_u32le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void store_u32le(std::uint8_t* p, std::uint32_t v) {
    p[0] = static_cast<std::uint8_t>(v);
    p[1] = static_cast<std::uint8_t>(v >> 8);
    p[2] = static_cast<std::uint8_t>(v >> 16);
    p[3] = static_cast<std::uint8_t>(v >> 24);
}

}  // namespace

std::vector<std::uint8_t> encode_weight_field(const WeightField& field) {
    const auto weights = field.weights();
    std::vector<std::uint8_t> out(kHeaderSize + 4 * weights.size());
    std::memcpy(out.data(), kMagic, 4);
    store_u32le(out.data() + 4, static_cast<std::uint32_t>(field.width()));
    store_u32le(out.data() + 8, static_cast<std::uint32_t>(field.height()));
    for (std::size_t i = 0; i < weights.size(); ++i)
        store_u32le(out.data() + kHeaderSize + 4 * i, std::bit_cast<std::uint32_t>(weights[i]));
    return out;
}

WeightField decode_weight_field(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw Error(ErrorKind::BadMagic, "weight field: missing WGT1 magic");
    if (bytes.size() < kHeaderSize)
        throw Error(ErrorKind::TruncatedPayload, "weight field: truncated header");
    const std::uint32_t width = read_u32le(bytes.data() + 4);
    const std::uint32_t height = read_u32le(bytes.data() + 8);
    if (width > 0x7fffffffu || height > 0x7fffffffu)
        throw Error(ErrorKind::Decode, fmt::format("weight field: absurd size {}x{}", width, height));
    const std::uint64_t count = static_cast<std::uint64_t>(width) * height;
    if (bytes.size() - kHeaderSize < count * 4)
        throw Error(ErrorKind::TruncatedPayload,
                    fmt::format("weight field: {}x{} needs {} payload bytes, found {}", width, height,
                                count * 4, bytes.size() - kHeaderSize));
    if (bytes.size() - kHeaderSize > count * 4)
        throw Error(ErrorKind::Decode, "weight field: trailing bytes after payload");

    std::vector<float> weights(static_cast<std::size_t>(count));
    const std::uint8_t* p = bytes.data() + kHeaderSize;
    for (std::size_t i = 0; i < weights.size(); ++i, p += 4)
        weights[i] = std::bit_cast<float>(read_u32le(p));
    return WeightField(static_cast<int>(width), static_cast<int>(height), std::move(weights));
}

WeightField load_weight_field(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    try {
        return decode_weight_field(bytes);
    } catch (const Error& e) {
        throw Error(e.kind(), fmt::format("{}: {}", path.string(), e.what()));
    }
}

void write_weight_field(const WeightField& field, const std::filesystem::path& path) {
    write_file_bytes(path, encode_weight_field(field));
}

}  // namespace segscope
